"""Closed-form minimum distances and their minimum-weight witnesses.

Every result carries a ``witness``: the exponents of an explicit codeword of
the code whose Hamming weight equals the distance.  For the single-factor
family it is ``(e,)`` standing for ``(x^n + gamma)^e``; for the two-factor
family it is ``(A, B)`` standing for ``(x^n - xi)^A (x^n + xi)^B``, already in
the caller's ``(i, j)`` orientation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .codes import (
    CodeInstance,
    SingleFactorSpec,
    binomial_power,
    x2_plus_1_irreducible,
)
from .errors import EvenCharacteristic, OutOfRange, WrongArity, ZeroCode
from .finite_field import is_prime
from .padic import Beta, Low, TauK, class_top, classify_exponent
from .polynomial import Polynomial


@dataclass(frozen=True)
class DistanceResult:
    value: Optional[int]
    case: str
    family: str
    p: int
    s: int
    i: int
    j: Optional[int] = None
    swapped: bool = False
    witness: tuple[int, ...] = field(default=(), repr=False)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "p": self.p,
            "s": self.s,
            "i": self.i,
            "j": self.j,
            "distance": self.value,
            "case": self.case,
            "swapped": self.swapped,
        }


def _check(p: int, s: int, *exps: int) -> None:
    if not is_prime(p):
        raise OutOfRange(f"p = {p} is not prime")
    if s < 1:
        raise OutOfRange(f"s must be >= 1, got {s}")
    for e in exps:
        if not 0 <= e <= p**s:
            raise OutOfRange(f"exponent {e} outside [0, {p**s}]")


def distance_single(p: int, s: int, i: int) -> DistanceResult:
    """Minimum distance of ``<(x^n + gamma)^i>``; independent of n, a and gamma."""
    _check(p, s, i)
    ps = p**s

    def res(value, case, e):
        return DistanceResult(value, case, "single", p, s, i, witness=(e,) if e is not None else ())

    if i == 0:
        return res(1, "FullSpace", 0)
    if i == ps:
        return res(None, "ZeroCode", None)
    cls = classify_exponent(i, p, s)
    top = class_top(cls, p, s)
    if isinstance(cls, Low):
        return res(2, "Low2", top)
    if isinstance(cls, Beta):
        return res(cls.beta + 2, "Beta", top)
    return res((cls.tau + 1) * p**cls.k, "TauK", top)


def _two_factor_row(p: int, s: int, i: int, j: int) -> tuple[int, str, tuple[int, int]]:
    """Table lookup for ``i >= j``; returns (distance, row, witness exponents)."""
    ps, low = p**s, p ** (s - 1)
    if j == 0:
        return 2, "T1", (ps, 0)
    if i <= low:
        return 2, "T2", (low, low)
    if j <= low:
        if i <= 2 * low:
            return 3, "T3", (2 * low, 2 * low)
        return 4, "T4", (ps, low)

    cj = classify_exponent(j, p, s)
    if i == ps:
        if isinstance(cj, Beta):
            return 2 * (cj.beta + 2), "T10", (ps, class_top(cj, p, s))
        return 2 * (cj.tau + 1) * p**cj.k, "T11", (ps, class_top(cj, p, s))

    ci = classify_exponent(i, p, s)
    top_i, top_j = class_top(ci, p, s), class_top(cj, p, s)
    if isinstance(ci, Beta):
        # j is Beta with beta' <= beta since i >= j
        both, split = ci.beta + 2, 2 * (cj.beta + 2)
        if both <= split:
            return both, "T5", (top_i, top_i)
        return split, "T5", (ps, top_j)
    if isinstance(cj, Beta):
        return 2 * (cj.beta + 2), "T6", (ps, top_j)
    if ci == cj:
        return (ci.tau + 1) * p**ci.k, "T7", (top_i, top_i)
    if ci.k == cj.k:
        both, split = (ci.tau + 1) * p**ci.k, 2 * (cj.tau + 1) * p**cj.k
        if both <= split:
            return both, "T8", (top_i, top_i)
        return split, "T8", (ps, top_j)
    return 2 * (cj.tau + 1) * p**cj.k, "T9", (ps, top_j)


def distance_two_factor(p: int, s: int, i: int, j: int) -> DistanceResult:
    """Minimum distance of ``<(x^n - xi)^i (x^n + xi)^j>``; independent of n, a and xi."""
    if p == 2:
        raise EvenCharacteristic("the two-factor family needs odd p")
    _check(p, s, i, j)
    ps = p**s
    if i == j == 0:
        return DistanceResult(1, "FullSpace", "two", p, s, i, j, witness=(0, 0))
    if i == j == ps:
        return DistanceResult(None, "ZeroCode", "two", p, s, i, j)
    swapped = i < j
    hi, lo = (j, i) if swapped else (i, j)
    value, row, (A, B) = _two_factor_row(p, s, hi, lo)
    if swapped:
        A, B = B, A
    return DistanceResult(value, row, "two", p, s, i, j, swapped, (A, B))


def negacyclic_distance(p: int, a: int, s: int, i: int, j: Optional[int] = None) -> DistanceResult:
    """Distance of a length ``2 p^s`` negacyclic code over F_{p^a}, p odd."""
    if x2_plus_1_irreducible(p, a):
        if j is not None:
            raise WrongArity("x^2 + 1 is irreducible here: give only i")
        return distance_single(p, s, i)
    if j is None:
        raise WrongArity("x^2 + 1 splits here: both i and j are required")
    return distance_two_factor(p, s, i, j)


def distance_for(code: CodeInstance) -> DistanceResult:
    spec = code.spec
    if isinstance(spec, SingleFactorSpec):
        return distance_single(spec.ctx.p, spec.s, spec.i)
    return distance_two_factor(spec.ctx.p, spec.s, spec.i, spec.j)


def certificate_for(code: CodeInstance, result: Optional[DistanceResult] = None) -> Polynomial:
    """A codeword of ``code`` whose weight is the claimed minimum distance."""
    if result is None:
        result = distance_for(code)
    if result.value is None:
        raise ZeroCode("the zero code has no minimum-weight word")
    spec, ctx = code.spec, code.ctx
    if isinstance(spec, SingleFactorSpec):
        (e,) = result.witness
        return binomial_power(ctx, spec.n, spec.gamma.value, e)
    A, B = result.witness
    return binomial_power(ctx, spec.n, (-spec.xi).value, A) * binomial_power(ctx, spec.n, spec.xi.value, B)
