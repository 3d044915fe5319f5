#!/usr/bin/env python3

from typing import Optional, Tuple

# For all the procedures in DetpolyUI, return a tuple as the result. The first
# element is the process exit code (0 decided, 2 Unknown verdict, 3 precondition
# failure, 4 resource exhausted, 5 parse error). The second element is the
# error message if the procedure failed.
DetpolyProcedureResult = Tuple[int, Optional[str]]

EXIT_DECIDED = 0
EXIT_UNKNOWN = 2


def ceil_log(value: int, base: int) -> int:
    """Smallest k >= 0 with base**k >= value."""
    k, power = 0, 1
    while power < value:
        power *= base
        k += 1
    return k
