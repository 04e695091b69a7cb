"""Dense univariate polynomials over a FieldContext.

Coefficients are kept as a little-endian tuple of packed field values with no
trailing zeros; the zero polynomial has an empty tuple and degree ``-inf``.
Multiplication and division walk only the nonzero terms of the sparser
operand, which keeps products of binomial powers such as ``(x^n + c)^N`` cheap.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping, Union

import numpy as np

from .errors import BothZero, ContextMismatch, DegreeZero, DivisionByZeroPoly
from .finite_field import FieldContext, FieldElement, prime_factors

NEG_INF = -math.inf

# Above this many term pairs a prime-field product is handed to numpy.
_NUMPY_PRODUCT_THRESHOLD = 4096


class Polynomial:
    """Polynomial with coefficients in ``ctx``.

    ``coeffs`` may hold FieldElements, canonical text, digit sequences or
    ints; ints are prime-field constants, as in ``FieldContext.element``.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldContext, coeffs: Iterable = ()):
        vals = [ctx.element(c).value for c in coeffs]
        while vals and vals[-1] == 0:
            vals.pop()
        self.ctx = ctx
        self.coeffs = tuple(vals)

    @classmethod
    def _raw(cls, ctx: FieldContext, vals: list) -> "Polynomial":
        # vals already reduced; only trailing zeros are stripped
        while vals and vals[-1] == 0:
            vals.pop()
        out = cls.__new__(cls)
        out.ctx = ctx
        out.coeffs = tuple(vals)
        return out

    @classmethod
    def zero(cls, ctx: FieldContext) -> "Polynomial":
        return cls._raw(ctx, [])

    @classmethod
    def one(cls, ctx: FieldContext) -> "Polynomial":
        return cls._raw(ctx, [1])

    @classmethod
    def x(cls, ctx: FieldContext) -> "Polynomial":
        return cls._raw(ctx, [0, 1])

    @classmethod
    def constant(cls, ctx: FieldContext, c) -> "Polynomial":
        return cls._raw(ctx, [ctx.element(c).value])

    @classmethod
    def monomial(cls, ctx: FieldContext, degree: int, c=1) -> "Polynomial":
        return cls.from_terms(ctx, {degree: c})

    @classmethod
    def from_terms(cls, ctx: FieldContext, terms: Mapping[int, object]) -> "Polynomial":
        if not terms:
            return cls.zero(ctx)
        vals = [0] * (max(terms) + 1)
        for d, c in terms.items():
            vals[d] = ctx.element(c).value
        return cls._raw(ctx, vals)

    @classmethod
    def binomial(cls, ctx: FieldContext, n: int, c) -> "Polynomial":
        """``x^n + c``."""
        vals = [0] * (n + 1)
        vals[0] = ctx.element(c).value
        vals[n] = ctx.add(vals[n], 1)
        return cls._raw(ctx, vals)

    # -- basic properties -------------------------------------------------

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def lead(self) -> FieldElement:
        return FieldElement(self.ctx, self.coeffs[-1] if self.coeffs else 0)

    def __getitem__(self, k: int) -> FieldElement:
        v = self.coeffs[k] if 0 <= k < len(self.coeffs) else 0
        return FieldElement(self.ctx, v)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self.ctx, v) for v in self.coeffs]

    def terms(self) -> list[tuple[int, int]]:
        return [(d, v) for d, v in enumerate(self.coeffs) if v]

    def weight(self) -> int:
        """Number of nonzero coefficients."""
        return sum(1 for v in self.coeffs if v)

    def vector(self, length: int) -> list[int]:
        """Packed coefficients padded with zeros to ``length``."""
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in length {length}")
        return list(self.coeffs) + [0] * (length - len(self.coeffs))

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        if isinstance(other, (int, FieldElement)):
            return self.coeffs == Polynomial.constant(self.ctx, other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx, self.coeffs))

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text() or '0'} over GF({self.ctx.p}^{self.ctx.a}))"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            v = self.coeffs[d]
            if not v:
                continue
            c = self.ctx.format(v)
            if self.ctx.a > 1:
                c = f"({c})"
            mono = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
            if not mono:
                parts.append(c)
            elif v == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    # -- text form ------------------------------------------------------

    def to_text(self) -> str:
        """``c0,c1,...`` for prime fields; ``c0;c1;...`` when a > 1."""
        sep = "," if self.ctx.a == 1 else ";"
        return sep.join(self.ctx.format(v) for v in self.coeffs)

    @classmethod
    def parse(cls, ctx: FieldContext, text: str) -> "Polynomial":
        text = text.strip()
        if not text:
            return cls.zero(ctx)
        if ctx.a == 1:
            return cls(ctx, [ctx.parse(t) for t in text.split(",")])
        return cls(ctx, [ctx.parse(t) for t in text.split(";")])

    # -- arithmetic -----------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise ContextMismatch("polynomials over different fields")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial.constant(self.ctx, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, v in enumerate(b):
            if v:
                out[k] = ctx.add(out[k], v)
        return Polynomial._raw(ctx, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.ctx, [self.ctx.neg(v) for v in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c) -> "Polynomial":
        return self._scale_value(self.ctx.element(c).value)

    def _scale_value(self, c: int) -> "Polynomial":
        return Polynomial._raw(self.ctx, [self.ctx.mul(c, v) for v in self.coeffs])

    def shift(self, k: int) -> "Polynomial":
        """Multiply by ``x^k``."""
        if not self.coeffs:
            return self
        return Polynomial._raw(self.ctx, [0] * k + list(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Polynomial.zero(self.ctx)
        ctx = self.ctx
        ta, tb = self.terms(), other.terms()
        size = len(self.coeffs) + len(other.coeffs) - 1
        if ctx.a == 1:
            if len(ta) * len(tb) > _NUMPY_PRODUCT_THRESHOLD:
                prod = np.convolve(np.array(self.coeffs, dtype=np.int64), np.array(other.coeffs, dtype=np.int64))
                return Polynomial._raw(ctx, [int(v) for v in prod % ctx.p])
            acc = [0] * size
            for i, u in ta:
                for j, v in tb:
                    acc[i + j] += u * v
            p = ctx.p
            return Polynomial._raw(ctx, [v % p for v in acc])
        acc = [0] * size
        add, mul = ctx.add, ctx.mul
        for i, u in ta:
            for j, v in tb:
                acc[i + j] = add(acc[i + j], mul(u, v))
        return Polynomial._raw(ctx, acc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.one(self.ctx)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other) -> tuple["Polynomial", "Polynomial"]:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            raise DivisionByZeroPoly("division by the zero polynomial")
        ctx = self.ctx
        dg = len(other.coeffs) - 1
        df = len(self.coeffs) - 1
        if df < dg:
            return Polynomial.zero(ctx), self
        lead_inv = ctx.inv(other.coeffs[-1])
        gterms = [(d, v) for d, v in enumerate(other.coeffs[:-1]) if v]
        r = list(self.coeffs)
        quot = [0] * (df - dg + 1)
        if ctx.a == 1:
            p = ctx.p
            for k in range(df, dg - 1, -1):
                c = r[k] % p
                if not c:
                    continue
                c = c * lead_inv % p
                quot[k - dg] = c
                base = k - dg
                for d, v in gterms:
                    r[base + d] -= c * v
            rem = [v % p for v in r[:dg]]
        else:
            add, mul, neg = ctx.add, ctx.mul, ctx.neg
            for k in range(df, dg - 1, -1):
                c = r[k]
                if not c:
                    continue
                c = mul(c, lead_inv)
                quot[k - dg] = c
                base = k - dg
                nc = neg(c)
                for d, v in gterms:
                    r[base + d] = add(r[base + d], mul(nc, v))
            rem = r[:dg]
        return Polynomial._raw(ctx, quot), Polynomial._raw(ctx, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x) -> FieldElement:
        """Evaluate at a field element (Horner)."""
        ctx = self.ctx
        xv = ctx.element(x).value
        acc = 0
        for v in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, xv), v)
        return FieldElement(ctx, acc)

    # -- higher level operations ------------------------------------------

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        return self._scale_value(self.ctx.inv(self.coeffs[-1]))

    def powmod(self, e: int, m: "Polynomial") -> "Polynomial":
        """``self**e mod m`` by repeated squaring."""
        if not m:
            raise DivisionByZeroPoly("modulus is the zero polynomial")
        result = Polynomial.one(self.ctx) % m
        base = self % m
        while e:
            if e & 1:
                result = (result * base) % m
            e >>= 1
            if e:
                base = (base * base) % m
        return result

    def is_irreducible(self) -> bool:
        """Rabin's test: ``x^(q^d) = x mod f`` and ``gcd(x^(q^(d/t)) - x, f) = 1``
        for every prime ``t | d``."""
        d = self.degree
        if d < 1:
            raise DegreeZero("irreducibility is undefined for constants")
        if d == 1:
            return True
        f = self.monic()
        x = Polynomial.x(self.ctx)
        wanted = {d // t for t in prime_factors(d)}
        h = x
        frob = {}
        for k in range(1, d + 1):
            h = h.powmod(self.ctx.q, f)
            if k in wanted:
                frob[k] = h
        if h != x % f:
            return False
        return all(gcd(frob[k] - x, f).degree == 0 for k in wanted)

    def multiplicity(self, factor: "Polynomial") -> int:
        """Largest ``m`` with ``factor**m`` dividing ``self`` (self nonzero)."""
        if not self.coeffs:
            raise ValueError("multiplicity of a factor in the zero polynomial is unbounded")
        if factor.degree < 1:
            raise DegreeZero("multiplicity needs a nonconstant factor")
        p = self.ctx.p
        chunks = [(1, factor)]
        while chunks[-1][1].degree * p <= self.degree:
            e, f = chunks[-1]
            chunks.append((e * p, f**p))
        m, cur = 0, self
        for e, f in reversed(chunks):
            while cur.degree >= f.degree:
                quo, rem = divmod(cur, f)
                if rem:
                    break
                cur, m = quo, m + e
        return m


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    f._check(g)
    if not f and not g:
        raise BothZero("gcd(0, 0) is undefined")
    while g:
        f, g = g, f % g
    return f.monic()


def poly_weight(f: Polynomial) -> int:
    return f.weight()
