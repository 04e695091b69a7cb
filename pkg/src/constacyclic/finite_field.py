"""Exact arithmetic in F_p and F_{p^a}.

F_{p^a} is realised as F_p[y]/(m(y)) where m is the lexicographically smallest
monic irreducible polynomial of degree a (coefficients compared low degree
first).  An element is stored as the integer ``sum(c_d * p**d)`` built from its
little-endian coefficient vector, so ``0`` is the zero element, ``1`` the unit
and integers ``0 .. p-1`` are the prime-field constants.

Contexts are immutable and cached: ``ff_construct(3, 2) is ff_construct(3, 2)``.
"""

from __future__ import annotations

import itertools
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Optional, Sequence, Union

import numpy as np

from .errors import CapExceeded, ContextMismatch, NotPrime, OutOfRange, ZeroInverse

DEFAULT_CAP = 2**20

# Fields up to this size get log/antilog tables on first multiplication.
_LOG_TABLE_LIMIT = 2**16
# Dense q x q numpy tables (used by the brute-force oracle) are limited to this.
_NUMPY_TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FieldContext:
    """The field F_{p^a} together with its defining modulus.

    Arithmetic methods (``add``, ``mul``, ...) act on the packed integer
    encoding and are what the polynomial layer uses in its inner loops.
    ``FieldElement`` wraps them with operators for interactive use.
    """

    def __init__(self, p: int, a: int, modulus: Sequence[int]):
        self.p = p
        self.a = a
        self.modulus = tuple(modulus)
        self.q = p**a
        self._exp: Optional[list[int]] = None
        self._log: Optional[list[int]] = None
        self._table_state = 0  # 0: not tried, 1: building, 2: done or skipped

    def __repr__(self) -> str:
        return f"FieldContext(p={self.p}, a={self.a}, modulus={self.modulus})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldContext):
            return NotImplemented
        return (self.p, self.a, self.modulus) == (other.p, other.a, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.a, self.modulus))

    # -- encoding -------------------------------------------------------

    def digits(self, v: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.a):
            v, r = divmod(v, p)
            out.append(r)
        return tuple(out)

    def pack(self, digits: Iterable[int]) -> int:
        v = 0
        for d in reversed(list(digits)):
            v = v * self.p + d % self.p
        return v

    # -- arithmetic on packed integers ------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.a == 1:
            return (x + y) % self.p
        if self.p == 2:
            return x ^ y
        p = self.p
        out, scale = 0, 1
        while x or y:
            x, dx = divmod(x, p)
            y, dy = divmod(y, p)
            out += ((dx + dy) % p) * scale
            scale *= p
        return out

    def neg(self, x: int) -> int:
        if self.a == 1:
            return -x % self.p
        if self.p == 2:
            return x
        p = self.p
        out, scale = 0, 1
        while x:
            x, d = divmod(x, p)
            out += (-d % p) * scale
            scale *= p
        return out

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self.a == 1:
            return x * y % self.p
        if not x or not y:
            return 0
        if self._table_state == 0:
            self._build_log_tables()
        if self._log is not None:
            return self._exp[self._log[x] + self._log[y]]
        return self._mul_slow(x, y)

    def _mul_slow(self, x: int, y: int) -> int:
        p, a, m = self.p, self.a, self.modulus
        dx, dy = self.digits(x), self.digits(y)
        r = [0] * (2 * a - 1)
        for s, cx in enumerate(dx):
            if cx:
                for t, cy in enumerate(dy):
                    r[s + t] += cx * cy
        for k in range(2 * a - 2, a - 1, -1):
            c = r[k] % p
            if c:
                for t in range(a):
                    r[k - a + t] -= c * m[t]
            r[k] = 0
        return self.pack(r[:a])

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroInverse("zero has no multiplicative inverse")
        if self.a == 1:
            return pow(x, self.p - 2, self.p)
        if self._table_state == 0:
            self._build_log_tables()
        if self._log is not None:
            return self._exp[(self.q - 1 - self._log[x]) % (self.q - 1)]
        return self.pow(x, self.q - 2)

    def pow(self, x: int, e: int) -> int:
        """``x**e`` for ``e >= 0``; ``0**0`` is 1 by convention."""
        if e < 0:
            return self.pow(self.inv(x), -e)
        if e == 0:
            return 1
        if x == 0:
            return 0
        if self.a == 1:
            return pow(x, e, self.p)
        e %= self.q - 1
        if e == 0:
            return 1
        result, base = 1, x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def _build_log_tables(self) -> None:
        if self.q > _LOG_TABLE_LIMIT:
            self._table_state = 2
            return
        self._table_state = 1
        g = self.generator().value
        exp = [0] * (2 * self.q)
        log = [0] * self.q
        v = 1
        for k in range(self.q - 1):
            exp[k] = v
            log[v] = k
            v = self._mul_slow(v, g)
        for k in range(self.q - 1, 2 * self.q):
            exp[k] = exp[k - (self.q - 1)]
        self._exp, self._log = exp, log
        self._table_state = 2

    # -- element-level helpers ------------------------------------------

    def __call__(self, value) -> "FieldElement":
        return self.element(value)

    def element(self, value) -> "FieldElement":
        """Coerce ``value`` into this field.

        Accepts a FieldElement of this field, an int (taken as an F_p
        constant, reduced mod p), a digit sequence, or canonical text.
        """
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise ContextMismatch(f"{value!r} does not belong to {self!r}")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, int(value) % self.p)
        if isinstance(value, str):
            return self.parse(value)
        digits = list(value)
        if len(digits) > self.a:
            raise OutOfRange(f"expected at most {self.a} coefficients, got {len(digits)}")
        return FieldElement(self, self.pack(int(d) for d in digits))

    def from_value(self, v: int) -> "FieldElement":
        if not 0 <= v < self.q:
            raise OutOfRange(f"packed value {v} outside [0, {self.q})")
        return FieldElement(self, v)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> list["FieldElement"]:
        """All q elements, zero first, in packed-integer order."""
        return [FieldElement(self, v) for v in range(self.q)]

    def generator(self) -> "FieldElement":
        """The first element (in enumeration order) of multiplicative order q - 1."""
        return FieldElement(self, self._generator_value)

    @cached_property
    def _generator_value(self) -> int:
        if self.q == 2:
            return 1
        order = self.q - 1
        cofactors = [order // r for r in prime_factors(order)]
        for v in range(2, self.q):
            if all(self._pow_slow(v, c) != 1 for c in cofactors):
                return v
        raise AssertionError("multiplicative group has no generator")  # pragma: no cover

    def _pow_slow(self, x: int, e: int) -> int:
        if self.a == 1:
            return pow(x, e, self.p)
        result, base = 1, x
        while e:
            if e & 1:
                result = self._mul_slow(result, base)
            base = self._mul_slow(base, base)
            e >>= 1
        return result

    def sqrt(self, x) -> Optional["FieldElement"]:
        """A square root of ``x`` if one exists, else None.

        Exhaustive search; of the (at most two) roots the one whose
        coefficient vector is lexicographically smaller (low degree first)
        is returned.
        """
        v = self.element(x).value
        if v == 0:
            return self.zero
        roots = [r for r in range(1, self.q) if self.mul(r, r) == v]
        if not roots:
            return None
        return FieldElement(self, min(roots, key=self.digits))

    def parse(self, text: str) -> "FieldElement":
        """Parse canonical text ``c0,c1,...`` (little endian) or ``g^k``.

        ``g`` denotes ``generator()``.  Digits may be negative and are
        reduced mod p, so ``-1`` is accepted for p - 1.
        """
        text = text.strip()
        if text.startswith("g^"):
            return self.generator() ** int(text[2:])
        if text == "g":
            return self.generator()
        parts = [int(t) for t in text.split(",")]
        return self.element(parts)

    def format(self, v: int) -> str:
        return ",".join(str(d) for d in self.digits(v))

    # -- numpy tables for vectorised scans ------------------------------

    @cached_property
    def add_table(self) -> np.ndarray:
        return self._numpy_table("add")

    @cached_property
    def mul_table(self) -> np.ndarray:
        return self._numpy_table("mul")

    def _numpy_table(self, kind: str) -> np.ndarray:
        if self.q > _NUMPY_TABLE_LIMIT:
            raise CapExceeded(f"dense tables unsupported for q = {self.q} > {_NUMPY_TABLE_LIMIT}")
        if self.a == 1:
            r = np.arange(self.q, dtype=np.int64)
            if kind == "add":
                return (r[:, None] + r[None, :]) % self.p
            return (r[:, None] * r[None, :]) % self.p
        op = self.add if kind == "add" else self.mul
        t = np.zeros((self.q, self.q), dtype=np.int64)
        for x in range(self.q):
            for y in range(self.q):
                t[x, y] = op(x, y)
        return t


class FieldElement:
    """An element of a FieldContext.

    Supports ``+ - * / **`` and unary minus.  Plain ints on either side are
    promoted to prime-field constants.
    """

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldContext, value: int):
        self.ctx = ctx
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.digits(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch(f"cannot combine elements of {self.ctx!r} and {other.ctx!r}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other) % self.ctx.p
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.ctx, self.ctx.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.ctx, self.ctx.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.ctx, self.ctx.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.ctx, self.ctx.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.ctx, self.ctx.mul(self.value, self.ctx.inv(o)))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.ctx, self.ctx.mul(o, self.ctx.inv(self.value)))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.inv(self.value))

    def sqrt(self) -> Optional["FieldElement"]:
        return self.ctx.sqrt(self)

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == int(other) % self.ctx.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx, self.value))

    def __str__(self) -> str:
        return self.ctx.format(self.value)

    def __repr__(self) -> str:
        if self.ctx.a == 1:
            return f"GF({self.ctx.p})({self})"
        return f"GF({self.ctx.p}^{self.ctx.a})({self})"


@lru_cache(maxsize=None)
def ff_construct(p: int, a: int = 1, cap: Optional[int] = DEFAULT_CAP) -> FieldContext:
    """Build F_{p^a}; ``cap=None`` lifts the size limit."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if a < 1:
        raise OutOfRange(f"extension degree must be >= 1, got {a}")
    if cap is not None and p**a > cap:
        raise CapExceeded(f"p^a = {p}^{a} exceeds cap {cap}")
    if a == 1:
        return FieldContext(p, 1, (0, 1))
    return FieldContext(p, a, _smallest_irreducible(p, a))


def _smallest_irreducible(p: int, a: int) -> tuple[int, ...]:
    from .polynomial import Polynomial

    base = ff_construct(p, 1, cap=None)
    # c0 = 0 is divisible by y, so the scan starts at c0 = 1
    for c0 in range(1, p):
        for rest in itertools.product(range(p), repeat=a - 1):
            coeffs = (c0, *rest, 1)
            if Polynomial(base, coeffs).is_irreducible():
                return coeffs
    raise AssertionError(f"no irreducible polynomial of degree {a} over F_{p}")  # pragma: no cover


def ff_enumerate(ctx: FieldContext) -> list[FieldElement]:
    return ctx.elements()


Scalar = Union[FieldElement, int, str, Sequence[int]]


def iter_nonzero(ctx: FieldContext) -> Iterator[FieldElement]:
    for v in range(1, ctx.q):
        yield FieldElement(ctx, v)
