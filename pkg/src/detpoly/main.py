#!/usr/bin/env python3

import argparse
import contextlib
import json
import logging
import sys
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from .detcore import (
    DEFAULT_POWER_CAP,
    UNKNOWN,
    AlmostSurjWitness,
    InRing,
    PolyMap,
    RadChi,
    RationalOnly,
    algebraically_independent,
    almost_surjectivity,
    decompose,
    determined_theorem_route,
    irr_of_closure,
    is_determined,
    non_almost_surjective_witness,
    radchi_membership,
    range_closure,
    rational_membership,
    subalgebra_membership,
)
from .exceptions import CharacteristicZeroError, DetpolyError, PreconditionViolated
from .expr import parse, parse_list
from .field import FieldSpec, field_from_characteristic
from .ideal import DEFAULT_STEP_BUDGET, Ideal, dimension, dimension_by_elimination, step_budget
from .poly import MonomialOrder, Polynomial, VarContext, compose, exact_divide
from .utils import EXIT_DECIDED, EXIT_UNKNOWN, DetpolyProcedureResult

Report = Dict[str, object]


class ArgumentParser(argparse.ArgumentParser):
    # usage errors are precondition failures (exit 3), not argparse's exit 2
    def error(self, message: str):  # type: ignore[override]
        raise PreconditionViolated(message)


@dataclass
class Query:
    spec: FieldSpec
    context: VarContext
    f: Optional[PolyMap] = None
    g: Optional[Polynomial] = None


class DetpolyUI:
    def __init__(self) -> None:
        self.args_parser: argparse.ArgumentParser = self.create_args_parser()

    def __add_log_levels(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "--quiet",
            dest="is_quiet",
            action="store_true",
            default=False,
            help="disable all loggings",
        )
        parser.add_argument(
            "--verbose",
            dest="is_verbose",
            action="store_true",
            default=False,
            help="enable verbose loggings",
        )

    def __add_query_args(self, parser: argparse.ArgumentParser, *, image_polys: bool = False) -> None:
        parser.add_argument(
            "--char",
            type=int,
            default=0,
            metavar="CHI",
            help="characteristic of the coefficient field: 0 for QQ (default) or a prime p for GF(p)",
        )
        parser.add_argument("--vars", required=True, help="comma-separated variables, e.g. t1,t2")
        parser.add_argument(
            "--map",
            dest="map_text",
            help="components of f separated by ';' (not ',', which separates --vars), e.g. 't1;t1*t2'",
        )
        parser.add_argument("--poly", help="the polynomial g, e.g. 't1*t2^2'")
        parser.add_argument(
            "--order",
            choices=("grevlex", "lex"),
            default="grevlex",
            help="monomial order for printed results (default: grevlex)",
        )
        parser.add_argument(
            "--step-budget",
            type=int,
            default=DEFAULT_STEP_BUDGET,
            help=f"maximum number of reduction steps before giving up (default: {DEFAULT_STEP_BUDGET})",
        )
        parser.add_argument(
            "--format",
            dest="output_format",
            choices=("text", "json"),
            default="text",
            help="report format (default: text)",
        )
        if image_polys:
            parser.add_argument("--p", dest="p_text", required=True, help="polynomial p in x1..xm")
            parser.add_argument("--q", dest="q_text", required=True, help="polynomial q in x1..xm")
        self.__add_log_levels(parser)

    def create_args_parser(self) -> argparse.ArgumentParser:
        parser = ArgumentParser(
            prog="detpoly",
            formatter_class=argparse.RawDescriptionHelpFormatter,
            description=(
                "Decide how a polynomial g relates to a polynomial map f = (f1, ..., fm).\n"
                "'determined' means determined over the algebraic closure of the coefficient field.\n"
                "Exit codes: 0 decided, 2 unknown, 3 precondition failure, 4 resource exhausted,"
                " 5 parse error."
            ),
        )
        parser.add_argument(
            "--version",
            action="store_true",
            default=False,
            help="show version and exit",
        )
        self.__add_log_levels(parser)
        subparsers: argparse._SubParsersAction = parser.add_subparsers(title="commands", dest="command")

        def query(name: str, help_text: str, func: Callable, **kwargs) -> argparse.ArgumentParser:
            sub = subparsers.add_parser(name, help=help_text)
            self.__add_query_args(sub, **kwargs)
            sub.set_defaults(func=func)
            return sub

        query("indep", "whether the components of f are algebraically independent", self.run_indep_args)
        query("range-closure", "ideal of the Zariski closure of the range of f", self.run_range_closure_args)
        query("irr-closure", "irreducible polynomial of the closure of {(f(a), g(a))}", self.run_irr_closure_args)
        query("member-ring", "whether g = p(f) for a polynomial p", self.run_member_ring_args)
        query("member-field", "whether g * s(f) = r(f) for polynomials r, s", self.run_member_field_args)
        radchi = query("radchi", "whether g^(chi^nu) = p(f) for some nu", self.run_radchi_args)
        radchi.add_argument("--nu-cap", type=int, default=None, help="largest nu to try")
        query("determined", "whether g is determined by f (double-point ideal)", self.run_determined_args)
        query(
            "determined-thm",
            "whether g is determined by f, through membership (needs f almost surjective)",
            self.run_determined_thm_args,
        )
        almost = query(
            "almost-surj",
            "whether f is almost surjective; No reports the first witness (p, q) found, not a canonical one",
            self.run_almost_surj_args,
        )
        almost.add_argument(
            "--power-cap",
            type=int,
            default=DEFAULT_POWER_CAP,
            help=f"largest power tried when expanding a witness (default: {DEFAULT_POWER_CAP})",
        )
        query(
            "witness",
            "a g determined by f outside k[f], from p, q with p(f) | q(f) and p ∤ q",
            self.run_witness_args,
            image_polys=True,
        )
        query("divides", "whether p(f) divides q(f)", self.run_divides_args, image_polys=True)
        decompose_parser = query("decompose", "p (and nu) with g^(chi^nu) = p(f)", self.run_decompose_args)
        decompose_parser.add_argument(
            "--assume-almost-surjective",
            action="store_true",
            default=False,
            help="skip the almost-surjectivity check",
        )
        dim = query("dim", "dimension of an ideal", self.run_dim_args)
        dim.add_argument("--ideal", dest="ideal_text", required=True, help="generators separated by ';'")

        self.explain_parser = subparsers.add_parser("explain", help="explain a term")
        self.explain_parser.add_argument("term", nargs="?", help="term to explain")
        self.__add_log_levels(self.explain_parser)
        self.explain_parser.set_defaults(func=self.run_explain_args)
        return parser

    # -- plumbing ------------------------------------------------------------

    def load(self, options: argparse.Namespace, need_map: bool = True, need_poly: bool = False) -> Query:
        spec = field_from_characteristic(options.char)
        names = tuple(v.strip() for v in options.vars.split(",") if v.strip())
        if not names:
            raise PreconditionViolated("--vars declares no variables")
        order = MonomialOrder.from_name(options.order)
        context = VarContext(names, order)
        query = Query(spec, context)
        if need_map:
            if options.map_text is None:
                raise PreconditionViolated(f"{options.command} needs --map")
            query.f = PolyMap(parse_list(options.map_text, context, spec), image_order=order)
        if need_poly:
            if options.poly is None:
                raise PreconditionViolated(f"{options.command} needs --poly")
            query.g = parse(options.poly, context, spec)
        return query

    def inputs(self, options: argparse.Namespace) -> Report:
        out: Report = {"char": options.char, "vars": options.vars, "order": options.order}
        for key in ("map_text", "poly", "p_text", "q_text", "ideal_text", "nu_cap", "power_cap"):
            if (value := getattr(options, key, None)) is not None:
                out[key.removesuffix("_text")] = value
        return out

    def emit(self, report: Report, output_format: str) -> None:
        if output_format == "json":
            text = json.dumps(report, ensure_ascii=False)
        else:
            lines = []
            for key, value in report.items():
                if value is None:
                    continue
                shown = value if isinstance(value, str) else json.dumps(value, ensure_ascii=False)
                lines.append(f"{key}: {shown}")
            text = "\n".join(lines)
        with contextlib.suppress(BrokenPipeError):
            sys.stdout.write(f"{text}\n")

    def run_query(
        self, options: argparse.Namespace, body: Callable[[argparse.Namespace, Report], int]
    ) -> DetpolyProcedureResult:
        report: Report = {
            "command": options.command,
            "inputs": self.inputs(options),
            "verdict": None,
            "certificate": None,
            "verified": None,
            "elapsed_ms": None,
            "error": None,
        }
        start = time.perf_counter()
        code, err_msg = EXIT_DECIDED, None
        try:
            with step_budget(options.step_budget) as counter:
                code = body(options, report)
            logging.debug(f"{counter.used} reduction steps")
        except DetpolyError as e:
            code, err_msg = e.exit_code, f"{type(e).__name__}: {e}"
        except ValueError as e:
            code, err_msg = PreconditionViolated.exit_code, f"{type(e).__name__}: {e}"
        report["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
        report["error"] = err_msg
        self.emit(report, options.output_format)
        return code, err_msg

    # -- commands ------------------------------------------------------------

    def run_indep_args(self, options: argparse.Namespace) -> DetpolyProcedureResult:
        def body(options: argparse.Namespace, report: Report) -> int:
            f = self.load(options).f
            assert f is not None
            independent = algebraically_independent(f)
            report["verdict"] = independent
            closure = f.closure
            if not closure.is_zero:
                report["certificate"] = {"annihilator": str(closure.groebner_basis()[0])}
            report["verified"] = independent == (f.m <= f.n and closure.is_zero)
            return EXIT_DECIDED

        return self.run_query(options, body)

    def run_range_closure_args(self, options: argparse.Namespace) -> DetpolyProcedureResult:
        def body(options: argparse.Namespace, report: Report) -> int:
            f = self.load(options).f
            assert f is not None
            closure = range_closure(f)
            basis = closure.groebner_basis()
            report["verdict"] = "dominant" if not basis else "not-dominant"
            report["certificate"] = {"ideal": [str(p) for p in basis]}
            report["verified"] = all(f.compose(p).is_zero for p in basis)
            return EXIT_DECIDED

        return self.run_query(options, body)

    def run_irr_closure_args(self, options: argparse.Namespace) -> DetpolyProcedureResult:
        def body(options: argparse.Namespace, report: Report) -> int:
            query = self.load(options, need_poly=True)
            assert query.f is not None and query.g is not None
            cert = irr_of_closure(query.f, query.g)
            report["verdict"] = str(cert.q)
            report["certificate"] = {"q": str(cert.q), "d": cert.d}
            report["verified"] = compose(cert.q, [*query.f.components, query.g]).is_zero
            return EXIT_DECIDED

        return self.run_query(options, body)

    def run_member_ring_args(self, options: argparse.Namespace) -> DetpolyProcedureResult:
        def body(options: argparse.Namespace, report: Report) -> int:
            query = self.load(options, need_poly=True)
            assert query.f is not None and query.g is not None
            p = subalgebra_membership(query.f, query.g)
            report["verdict"] = p is not None
            if p is not None:
                cert = InRing(p)
                report["certificate"] = cert.to_dict()
                report["verified"] = cert.verify(query.f, query.g)
            return EXIT_DECIDED

        return self.run_query(options, body)

    def run_member_field_args(self, options: argparse.Namespace) -> DetpolyProcedureResult:
        def body(options: argparse.Namespace, report: Report) -> int:
            query = self.load(options, need_poly=True)
            assert query.f is not None and query.g is not None
            found = rational_membership(query.f, query.g)
            report["verdict"] = found is not None
            if found is not None:
                cert = RationalOnly(*found)
                report["certificate"] = cert.to_dict()
                report["verified"] = cert.verify(query.f, query.g)
            return EXIT_DECIDED

        return self.run_query(options, body)

    def run_radchi_args(self, options: argparse.Namespace) -> DetpolyProcedureResult:
        def body(options: argparse.Namespace, report: Report) -> int:
            query = self.load(options, need_poly=True)
            assert query.f is not None and query.g is not None
            if query.spec.characteristic == 0:
                raise CharacteristicZeroError("radchi needs --char set to a prime")
            found = radchi_membership(query.f, query.g, nu_cap=options.nu_cap)
            report["verdict"] = found is not None
            if found is not None:
                cert = RadChi(*found)
                report["certificate"] = cert.to_dict()
                report["verified"] = cert.verify(query.f, query.g)
            return EXIT_DECIDED

        return self.run_query(options, body)

    def run_determined_args(self, options: argparse.Namespace) -> DetpolyProcedureResult:
        def body(options: argparse.Namespace, report: Report) -> int:
            query = self.load(options, need_poly=True)
            assert query.f is not None and query.g is not None
            result = is_determined(query.f, query.g)
            report["verdict"] = result.determined
            report["certificate"] = result.certificate.to_dict()
            report["verified"] = result.verify(query.f, query.g)
            return EXIT_DECIDED

        return self.run_query(options, body)

    def run_determined_thm_args(self, options: argparse.Namespace) -> DetpolyProcedureResult:
        def body(options: argparse.Namespace, report: Report) -> int:
            query = self.load(options, need_poly=True)
            assert query.f is not None and query.g is not None
            result = determined_theorem_route(query.f, query.g)
            report["verdict"] = result.determined
            report["certificate"] = result.certificate.to_dict()
            report["verified"] = result.verify(query.f, query.g)
            return EXIT_DECIDED

        return self.run_query(options, body)

    def run_almost_surj_args(self, options: argparse.Namespace) -> DetpolyProcedureResult:
        def body(options: argparse.Namespace, report: Report) -> int:
            f = self.load(options).f
            assert f is not None
            verdict = almost_surjectivity(f, power_cap=options.power_cap)
            report["verdict"] = verdict.value
            report["certificate"] = verdict.to_dict()
            report["verified"] = verdict.verify(f)
            return EXIT_UNKNOWN if verdict.value == UNKNOWN else EXIT_DECIDED

        return self.run_query(options, body)

    def run_witness_args(self, options: argparse.Namespace) -> DetpolyProcedureResult:
        def body(options: argparse.Namespace, report: Report) -> int:
            f = self.load(options).f
            assert f is not None
            image = f.image_context()
            p, q = parse(options.p_text, image, f.spec), parse(options.q_text, image, f.spec)
            b = non_almost_surjective_witness(f, p, q)
            report["verdict"] = str(b)
            report["certificate"] = {"p": str(p), "q": str(q), "b": str(b)}
            report["verified"] = AlmostSurjWitness(p, q).verify_separator(f, b)
            return EXIT_DECIDED

        return self.run_query(options, body)

    def run_divides_args(self, options: argparse.Namespace) -> DetpolyProcedureResult:
        def body(options: argparse.Namespace, report: Report) -> int:
            f = self.load(options).f
            assert f is not None
            image = f.image_context()
            p, q = parse(options.p_text, image, f.spec), parse(options.q_text, image, f.spec)
            pf, qf = f.compose(p), f.compose(q)
            if pf.is_zero:
                report["verdict"] = qf.is_zero
                report["verified"] = True
                return EXIT_DECIDED
            quotient = exact_divide(qf, pf)
            report["verdict"] = quotient is not None
            if quotient is not None:
                report["certificate"] = {"quotient": str(quotient)}
                report["verified"] = quotient * pf == qf
            return EXIT_DECIDED

        return self.run_query(options, body)

    def run_decompose_args(self, options: argparse.Namespace) -> DetpolyProcedureResult:
        def body(options: argparse.Namespace, report: Report) -> int:
            query = self.load(options, need_poly=True)
            assert query.f is not None and query.g is not None
            dec = decompose(query.f, query.g, assume_almost_surjective=options.assume_almost_surjective)
            report["verdict"] = str(dec.p)
            report["certificate"] = dec.to_dict()
            report["verified"] = dec.verify(query.f, query.g)
            return EXIT_DECIDED

        return self.run_query(options, body)

    def run_dim_args(self, options: argparse.Namespace) -> DetpolyProcedureResult:
        def body(options: argparse.Namespace, report: Report) -> int:
            query = self.load(options, need_map=False)
            ideal = Ideal(parse_list(options.ideal_text, query.context, query.spec), query.context, query.spec)
            d = dimension(ideal)
            report["verdict"] = d
            report["certificate"] = {"basis": [str(p) for p in ideal.groebner_basis()]}
            report["verified"] = dimension_by_elimination(ideal) == d
            return EXIT_DECIDED

        return self.run_query(options, body)

    def run_explain_args(self, options: argparse.Namespace) -> DetpolyProcedureResult:
        if options.term is None:
            self.explain_parser.print_help()
            return EXIT_DECIDED, None

        from .glossary import explain

        with contextlib.suppress(BrokenPipeError):
            if (ret := explain(options.term)) is not None:
                sys.stdout.write(f"{ret}\n")
        return EXIT_DECIDED, None

    def run_args(self, argv: List[str]) -> DetpolyProcedureResult:
        try:
            options = self.args_parser.parse_args(argv[1:])
        except DetpolyError as e:
            return e.exit_code, str(e)

        if options.version:
            return self.show_version()

        if options.is_verbose and options.is_quiet:
            return PreconditionViolated.exit_code, "logging cannot be quiet and verbose at the same time"

        if options.is_quiet:
            logging.basicConfig(format="%(message)s", level=logging.CRITICAL)
        elif options.is_verbose:
            logging.basicConfig(format="%(message)s", level=logging.DEBUG)
        else:
            logging.basicConfig(format="%(message)s", level=logging.INFO)

        if (func := getattr(options, "func", None)) is not None:
            return func(options)

        self.args_parser.print_help()
        return EXIT_DECIDED, None

    def show_version(self) -> DetpolyProcedureResult:
        from .about import __version__

        print(__version__)
        return EXIT_DECIDED, None


def main() -> None:
    ui = DetpolyUI()
    code, err_msg = ui.run_args(sys.argv)
    if err_msg is not None:
        logging.critical(err_msg)
    sys.exit(code)
