#!/usr/bin/env python3

import warnings


def explain(term):
    if term in GLOSSARY:
        return GLOSSARY[term]
    else:
        warnings.warn(f"Term '{term}' not found in glossary.", stacklevel=1)


GLOSSARY = {
    "determined": (
        "'g is determined by f' means g(a) = g(b) whenever f(a) = f(b), for all points a, b over the"
        " algebraic closure of the coefficient field"
    ),
    "k[f]": "'k[f]' is the set of polynomials p(f1, ..., fm) with p a polynomial (the subalgebra generated by f)",
    "k(f)": "'k(f) ∩ k[t]' is the set of polynomials equal to a rational function r(f) / s(f)",
    "radchi": "'rad_chi(P)' is the set of g with g^(chi^nu) in P for some nu >= 0, chi the characteristic",
    "almost-surjective": (
        "'f is almost surjective' means the Zariski closure of the complement of range(f) has dimension at"
        " most m - 2"
    ),
    "dominant": "'f is dominant' means range(f) is Zariski dense, i.e. the range closure ideal is zero",
    "range-closure": "'range closure' is the ideal of the Zariski closure of range(f), in x1..xm",
    "irr-closure": (
        "'Irr' is the monic irreducible q(x1, ..., x_{m+1}) vanishing on {(f(a), g(a))}; d is its degree"
        " in x_{m+1}"
    ),
    "graph-ideal": "'graph ideal' is <y1 - f1, ..., ym - fm>; eliminating t from it gives the range closure",
    "elimination-ideal": "'elimination ideal' is I ∩ k[S] for a subset S of the variables",
    "groebner": "'Groebner basis' is a generating set whose leading terms generate the leading-term ideal",
    "dimension": (
        "'dim I' is the largest number of variables S with I ∩ k[S] = <0>, and -1 for the unit ideal"
    ),
    "double-point": (
        "'double-point ideal' is <fi(s) - fi(u)> + <z*(g(s) - g(u)) - 1>; g is determined by f iff it is the"
        " unit ideal"
    ),
    "witness": (
        "'witness (p, q)' is a pair with p(f) | q(f) but p ∤ q; it proves f is not almost surjective and"
        " yields b = q1(f)^2 / p1(f), determined by f but not in k[f]"
    ),
    "decompose": "'decompose' finds p and nu with g^(chi^nu) = p(f), so g = h(f) with h = chi^nu-th root of p",
}
