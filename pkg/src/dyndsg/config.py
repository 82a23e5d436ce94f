"""Parameter bundle shared by every maintainer and estimator."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction


class ConfigError(ValueError):
    """Raised for an invalid parameter combination."""


def as_fraction(x) -> Fraction:
    """Exact rational from an int, Fraction, decimal string or float literal."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        # go through repr so 0.1 means 1/10, not the binary expansion
        return Fraction(repr(x))
    return Fraction(x)


def ceil_ln(n: int) -> int:
    """ceil(ln n), floored at 1 so tiny universes still get a positive slack."""
    return max(1, math.ceil(math.log(n))) if n > 1 else 1


def default_alpha(n: int, eps: Fraction) -> Fraction:
    return eps * eps / (4 * ceil_ln(n))


def default_dup_k(n: int, eps: Fraction, rank: int = 2) -> int:
    scale = 1 if rank <= 2 else rank
    return max(1, math.ceil(4 * scale * math.log(max(n, 2)) / float(eps * eps)))


def default_threshold(n: int, eps: Fraction) -> int:
    return max(1, math.ceil(4 * math.log(max(n, 2)) / float(eps * eps)))


@dataclass(frozen=True)
class Config:
    """Maintainer parameters.

    ``alpha`` and ``dup_k`` are derived from ``n`` and ``eps`` when left as
    ``None``. ``threshold_t`` stays ``None`` (no truncation) unless given;
    :meth:`truncation_threshold` supplies the default used by truncated
    structures.
    """

    n: int
    eps: Fraction = Fraction(1, 4)
    alpha: Fraction | None = None
    budget_c: int = 4
    dup_k: int | None = None
    threshold_t: int | None = None
    rank: int = 2

    def __post_init__(self):
        object.__setattr__(self, "eps", as_fraction(self.eps))
        if self.alpha is not None:
            object.__setattr__(self, "alpha", as_fraction(self.alpha))
        if not isinstance(self.n, int) or self.n < 1:
            raise ConfigError(f"vertex count must be a positive integer, got {self.n!r}")
        if not 0 < self.eps < 1:
            raise ConfigError(f"eps must lie in (0, 1), got {self.eps}")
        if self.alpha is not None and not 0 < self.alpha < 1:
            raise ConfigError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not isinstance(self.budget_c, int) or self.budget_c < 1:
            raise ConfigError(f"budget_c must be a positive integer, got {self.budget_c!r}")
        if self.dup_k is not None and (not isinstance(self.dup_k, int) or self.dup_k < 1):
            raise ConfigError(f"dup_k must be a positive integer, got {self.dup_k!r}")
        if self.threshold_t is not None and (
            not isinstance(self.threshold_t, int) or self.threshold_t < 1
        ):
            raise ConfigError(f"threshold_t must be a positive integer, got {self.threshold_t!r}")
        if not isinstance(self.rank, int) or self.rank < 2:
            raise ConfigError(f"rank must be an integer >= 2, got {self.rank!r}")
        if self.alpha is None:
            object.__setattr__(self, "alpha", default_alpha(self.n, self.eps))
        if self.dup_k is None:
            object.__setattr__(self, "dup_k", default_dup_k(self.n, self.eps, self.rank))

    @property
    def budget(self) -> int:
        """Loop budget per check call, floor(C / alpha)."""
        return max(1, math.floor(self.budget_c / self.alpha))

    def truncation_threshold(self) -> int:
        if self.threshold_t is not None:
            return self.threshold_t
        return default_threshold(self.n, self.eps)

    def with_(self, **changes) -> "Config":
        """Copy with changes; derived fields are recomputed unless given."""
        base = {"alpha": None, "dup_k": None} if {"n", "eps", "rank"} & changes.keys() else {}
        return replace(self, **{**base, **changes})
