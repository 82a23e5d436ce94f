"""Oracle brackets shared by the CLI's verify mode and the test suite."""

from __future__ import annotations

import math
from fractions import Fraction


def additive_slack(n: int, eps: Fraction, k: int) -> Fraction:
    """4 ln(n) / (eps k), with ln taken from the float log as an exact rational."""
    return Fraction(math.log(n)) * 4 / (eps * k) if n > 1 else Fraction(0)


def bracket_errors(opt: Fraction, value: Fraction, found: Fraction, eps: Fraction, slack: Fraction) -> list[str]:
    """Check ``opt <= value <= (1+eps) opt + slack`` and ``found >= (1-eps) opt - slack``."""
    errs = []
    if value < opt:
        errs.append(f"value {value} below optimum {opt}")
    if value > (1 + eps) * opt + slack:
        errs.append(f"value {value} above (1+eps)*{opt} + {float(slack):.4f}")
    if found < (1 - eps) * opt - slack:
        errs.append(f"subgraph density {found} below (1-eps)*{opt} - {float(slack):.4f}")
    return errs
