"""Repeated-root constacyclic codes of lengths n p^s and 2n p^s.

A code is an ideal ``<g>`` of ``F_q[x] / <x^N - lam>``.  Two families are
supported:

* single factor: ``x^(n p^s) - lam = (x^n + gamma)^(p^s)`` with ``x^n + gamma``
  irreducible and ``lam = -gamma^(p^s)``; codes ``<(x^n + gamma)^i>``.
* two factor (p odd): ``x^(2n p^s) - lam = ((x^n - xi)(x^n + xi))^(p^s)`` with
  both factors irreducible and ``lam = (xi^2)^(p^s)``; codes
  ``<(x^n - xi)^i (x^n + xi)^j>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Union

from .errors import (
    EvenCharacteristic,
    LengthMismatch,
    MessageTooLong,
    OutOfRange,
    ReducibleFactor,
    WrongArity,
)
from .finite_field import DEFAULT_CAP, FieldContext, FieldElement, ff_construct
from .polynomial import Polynomial


@dataclass(frozen=True)
class SingleFactorSpec:
    ctx: FieldContext
    n: int
    s: int
    gamma: FieldElement
    i: int

    family = "single"

    @property
    def lam(self) -> FieldElement:
        return -(self.gamma ** (self.ctx.p**self.s))

    @property
    def length(self) -> int:
        return self.n * self.ctx.p**self.s

    @property
    def dimension(self) -> int:
        return self.length - self.n * self.i

    @property
    def factor(self) -> Polynomial:
        return Polynomial.binomial(self.ctx, self.n, self.gamma)


@dataclass(frozen=True)
class TwoFactorSpec:
    ctx: FieldContext
    n: int
    s: int
    xi: FieldElement
    i: int
    j: int

    family = "two"

    @property
    def psi(self) -> FieldElement:
        return self.xi * self.xi

    @property
    def lam(self) -> FieldElement:
        return self.psi ** (self.ctx.p**self.s)

    @property
    def length(self) -> int:
        return 2 * self.n * self.ctx.p**self.s

    @property
    def dimension(self) -> int:
        return self.length - self.n * (self.i + self.j)

    @property
    def factors(self) -> tuple[Polynomial, Polynomial]:
        """``(x^n - xi, x^n + xi)``."""
        return (
            Polynomial.binomial(self.ctx, self.n, -self.xi),
            Polynomial.binomial(self.ctx, self.n, self.xi),
        )


Spec = Union[SingleFactorSpec, TwoFactorSpec]


@dataclass(frozen=True)
class CodeInstance:
    spec: Spec
    generator: Polynomial
    modulus: Polynomial
    dimension: int

    @property
    def ctx(self) -> FieldContext:
        return self.spec.ctx

    @property
    def family(self) -> str:
        return self.spec.family

    @property
    def length(self) -> int:
        return self.spec.length

    @property
    def lam(self) -> FieldElement:
        return self.spec.lam

    def descriptor(self) -> dict:
        spec, ctx = self.spec, self.ctx
        out = {"p": ctx.p, "a": ctx.a, "n": spec.n, "s": spec.s, "family": spec.family}
        if isinstance(spec, SingleFactorSpec):
            out["gamma"] = str(spec.gamma)
            out["i"], out["j"] = spec.i, None
        else:
            out["xi"] = str(spec.xi)
            out["i"], out["j"] = spec.i, spec.j
        out["lambda"] = str(self.lam)
        out["length"] = self.length
        out["dimension"] = self.dimension
        out["generator"] = [ctx.format(v) for v in self.generator.coeffs]
        return out


@lru_cache(maxsize=4096)
def binomial_power(ctx: FieldContext, n: int, c: int, e: int) -> Polynomial:
    """``(x^n + c)^e`` with ``c`` a packed field value."""
    return Polynomial.binomial(ctx, n, FieldElement(ctx, c)) ** e


def _nonzero(ctx: FieldContext, value, name: str) -> FieldElement:
    elem = ctx.element(value)
    if not elem:
        raise OutOfRange(f"{name} must be nonzero")
    return elem


def _check_exponent(e: int, ps: int, name: str) -> None:
    if not 0 <= e <= ps:
        raise OutOfRange(f"{name} = {e} outside [0, {ps}]")


def _instance(spec: Spec, generator: Polynomial) -> CodeInstance:
    ctx = spec.ctx
    modulus = Polynomial.monomial(ctx, spec.length) - Polynomial.constant(ctx, spec.lam)
    if modulus % generator:
        raise AssertionError("generator does not divide x^N - lambda")  # pragma: no cover
    return CodeInstance(spec, generator, modulus, spec.length - int(generator.degree))


def build_single(p: int, a: int, n: int, s: int, gamma, i: int, cap: Optional[int] = DEFAULT_CAP) -> CodeInstance:
    """The code ``<(x^n + gamma)^i>`` of length ``n p^s``."""
    ctx = ff_construct(p, a, cap)
    if n < 1 or s < 1:
        raise OutOfRange("n and s must be positive")
    gamma = _nonzero(ctx, gamma, "gamma")
    _check_exponent(i, p**s, "i")
    spec = SingleFactorSpec(ctx, n, s, gamma, i)
    if not spec.factor.is_irreducible():
        raise ReducibleFactor(f"x^{n} + {gamma} is reducible over F_{p}^{a}")
    return _instance(spec, binomial_power(ctx, n, gamma.value, i))


def build_two_factor(
    p: int, a: int, n: int, s: int, xi, i: int, j: int, cap: Optional[int] = DEFAULT_CAP
) -> CodeInstance:
    """The code ``<(x^n - xi)^i (x^n + xi)^j>`` of length ``2 n p^s``."""
    if p == 2:
        raise EvenCharacteristic("the two-factor family needs odd p")
    ctx = ff_construct(p, a, cap)
    if n < 1 or s < 1:
        raise OutOfRange("n and s must be positive")
    xi = _nonzero(ctx, xi, "xi")
    _check_exponent(i, p**s, "i")
    _check_exponent(j, p**s, "j")
    spec = TwoFactorSpec(ctx, n, s, xi, i, j)
    for f in spec.factors:
        if not f.is_irreducible():
            raise ReducibleFactor(f"{f} is reducible over F_{p}^{a}")
    g = binomial_power(ctx, n, (-xi).value, i) * binomial_power(ctx, n, xi.value, j)
    return _instance(spec, g)


def x2_plus_1_irreducible(p: int, a: int) -> bool:
    """Whether ``x^2 + 1`` is irreducible over F_{p^a}, p odd: iff p = 3 mod 4 and a odd."""
    if p == 2:
        raise EvenCharacteristic("criterion stated for odd p")
    return p % 4 == 3 and a % 2 == 1


def build_negacyclic(
    p: int, a: int, s: int, i: int, j: Optional[int] = None, cap: Optional[int] = DEFAULT_CAP
) -> CodeInstance:
    """Negacyclic code of length ``2 p^s`` over F_{p^a}.

    When ``x^2 + 1`` is irreducible this is ``<(x^2 + 1)^i>``; otherwise
    ``x^2 + 1 = (x - xi)(x + xi)`` and the code is ``<(x - xi)^i (x + xi)^j>``.
    """
    if x2_plus_1_irreducible(p, a):
        if j is not None:
            raise WrongArity("x^2 + 1 is irreducible here: give only i")
        return build_single(p, a, 2, s, 1, i, cap)
    if j is None:
        raise WrongArity("x^2 + 1 splits here: both i and j are required")
    ctx = ff_construct(p, a, cap)
    xi = ctx.sqrt(-ctx.one)
    return build_two_factor(p, a, 1, s, xi, i, j, cap)


def encode(code: CodeInstance, message: Polynomial) -> Polynomial:
    if message and message.degree >= code.dimension:
        raise MessageTooLong(f"message degree {message.degree} >= dimension {code.dimension}")
    return (message * code.generator) % code.modulus


def is_codeword(code: CodeInstance, c: Polynomial) -> bool:
    if c.degree >= code.length:
        raise LengthMismatch(f"degree {c.degree} does not fit in length {code.length}")
    return not (c % code.generator)


def lambda_shift(code: CodeInstance, c: Sequence) -> list[FieldElement]:
    """``(lam c_{N-1}, c_0, ..., c_{N-2})``."""
    if len(c) != code.length:
        raise LengthMismatch(f"expected {code.length} symbols, got {len(c)}")
    ctx = code.ctx
    c = [ctx.element(v) for v in c]
    return [code.lam * c[-1]] + c[:-1]


def to_word(code: CodeInstance, c: Polynomial) -> list[FieldElement]:
    return [FieldElement(code.ctx, v) for v in c.vector(code.length)]


def from_word(code: CodeInstance, word: Sequence) -> Polynomial:
    if len(word) != code.length:
        raise LengthMismatch(f"expected {code.length} symbols, got {len(word)}")
    return Polynomial(code.ctx, word)
