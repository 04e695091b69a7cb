"""Base-p digits, the three-family exponent partition and binomial-power weights.

Every distance formula in the package is keyed by where an exponent
``1 <= i <= p^s - 1`` falls in the partition

* ``Low``:        ``1 <= i <= p^(s-1)``
* ``Beta(b)``:    ``b p^(s-1) + 1 <= i <= (b+1) p^(s-1)``, ``1 <= b <= p-2``
* ``TauK(k, t)``: ``p^s - p^(s-k) + (t-1) p^(s-k-1) + 1 <= i <= p^s - p^(s-k) + t p^(s-k-1)``,
  ``1 <= k <= s-1``, ``1 <= t <= p-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterator, Optional, Union

from .errors import OutOfRange, WidthTooSmall


@dataclass(frozen=True)
class PadicExpansion:
    p: int
    digits: tuple[int, ...]

    @property
    def value(self) -> int:
        return sum(d * self.p**k for k, d in enumerate(self.digits))


def padic_expansion(a: int, p: int, width: Optional[int] = None) -> PadicExpansion:
    """Little-endian base-``p`` digits of ``a``; minimal unless ``width`` is given."""
    if a < 0:
        raise OutOfRange(f"p-adic expansion needs a >= 0, got {a}")
    digits = []
    n = a
    while n:
        n, r = divmod(n, p)
        digits.append(r)
    if width is not None:
        if len(digits) > width:
            raise WidthTooSmall(f"{a} needs {len(digits)} base-{p} digits, width is {width}")
        digits += [0] * (width - len(digits))
    return PadicExpansion(p, tuple(digits))


@dataclass(frozen=True)
class Low:
    name = "Low"


@dataclass(frozen=True)
class Beta:
    beta: int
    name = "Beta"


@dataclass(frozen=True)
class TauK:
    k: int
    tau: int
    name = "TauK"


PartitionClass = Union[Low, Beta, TauK]


def classify_exponent(i: int, p: int, s: int) -> PartitionClass:
    if s < 1:
        raise OutOfRange(f"s must be >= 1, got {s}")
    ps = p**s
    if not 1 <= i <= ps - 1:
        raise OutOfRange(f"exponent {i} outside [1, {ps - 1}]")
    low = p ** (s - 1)
    if i <= low:
        return Low()
    if i <= (p - 1) * low:
        return Beta((i - 1) // low)
    # i > p^s - p^(s-1): find k with p^s - p^(s-k) < i <= p^s - p^(s-k-1)
    for k in range(1, s):
        upper = ps - p ** (s - k - 1)
        if i <= upper:
            start = ps - p ** (s - k)
            step = p ** (s - k - 1)
            return TauK(k, (i - start - 1) // step + 1)
    raise AssertionError("partition does not cover i")  # pragma: no cover


def class_range(cls: PartitionClass, p: int, s: int) -> tuple[int, int]:
    """Inclusive ``(lo, hi)`` bounds of a partition class."""
    ps, low = p**s, p ** (s - 1)
    if isinstance(cls, Low):
        return 1, low
    if isinstance(cls, Beta):
        return cls.beta * low + 1, (cls.beta + 1) * low
    start = ps - p ** (s - cls.k)
    step = p ** (s - cls.k - 1)
    return start + (cls.tau - 1) * step + 1, start + cls.tau * step


def partition_classes(p: int, s: int) -> Iterator[PartitionClass]:
    """All classes of the partition of ``[1, p^s - 1]`` in increasing order."""
    yield Low()
    for beta in range(1, p - 1):
        yield Beta(beta)
    for k in range(1, s):
        for tau in range(1, p):
            yield TauK(k, tau)


def class_top(cls: PartitionClass, p: int, s: int) -> int:
    return class_range(cls, p, s)[1]


def weight_of_power(N: int, p: int) -> int:
    """Hamming weight of ``(x^n + c)^N`` for any ``n >= 1`` and ``c != 0``:
    the product of ``digit + 1`` over the base-``p`` digits of ``N``."""
    return prod(d + 1 for d in padic_expansion(N, p).digits)


def weight_lower_bound_beta(m: int, beta: int, p: int, s: int) -> bool:
    """Check ``w((x^n+c)^(m + beta p^(s-1) + 1)) >= beta + 2`` when
    ``m < p^s - beta p^(s-1) - 1``; vacuously true otherwise."""
    if not m < p**s - beta * p ** (s - 1) - 1:
        return True
    return weight_of_power(m + beta * p ** (s - 1) + 1, p) >= beta + 2


def weight_lower_bound_tauk(m: int, tau: int, k: int, p: int, s: int) -> bool:
    """Check ``w((x^n+c)^(m + p^s - p^(s-k) + (tau-1) p^(s-k-1) + 1)) >= (tau+1) p^k``
    when ``m < p^(s-k) - (tau-1) p^(s-k-1) - 1``; vacuously true otherwise."""
    if not m < p ** (s - k) - (tau - 1) * p ** (s - k - 1) - 1:
        return True
    N = m + p**s - p ** (s - k) + (tau - 1) * p ** (s - k - 1) + 1
    return weight_of_power(N, p) >= (tau + 1) * p**k
