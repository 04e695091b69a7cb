"""Independent ground truth for the distance formulas.

``brute_force_min_distance`` computes the minimum weight literally, by
encoding every message.  It knows nothing about the closed forms: no early
exit, no lower bound.  ``low_weight_search`` is an exact alternative for
codes whose dimension is too large to enumerate but whose redundancy is
small: it looks for codewords of weight ``w`` by testing every weight-``w``
support against the generator's syndromes.

The ``*_check`` functions evaluate the inequalities behind the formulas on
concrete inputs.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .codes import (
    CodeInstance,
    binomial_power,
    build_negacyclic,
    build_single,
    build_two_factor,
    is_codeword,
)
from .distance import certificate_for, distance_for
from .errors import OutOfRange, SearchSpaceTooLarge
from .finite_field import FieldContext, FieldElement, ff_construct
from .polynomial import Polynomial, gcd

DEFAULT_ORACLE_CAP = 2**24
DEFAULT_SEARCH_BUDGET = 2 * 10**6
_BLOCK_TARGET = 2**16


# -- exhaustive scan ---------------------------------------------------------


class _Arith:
    """Vectorised field arithmetic on packed values."""

    def __init__(self, ctx: FieldContext):
        self.ctx = ctx
        self.prime = ctx.a == 1
        if not self.prime:
            self.add_t = ctx.add_table
            self.mul_t = ctx.mul_table

    def add(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.prime:
            return (x + y) % self.ctx.p
        return self.add_t[x, y]

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.prime:
            return (x * y) % self.ctx.p
        return self.mul_t[x, y]


def _span(arith: _Arith, rows: np.ndarray) -> np.ndarray:
    """All ``q^d`` combinations of the ``d`` rows, first coefficient fastest."""
    q = arith.ctx.q
    alphas = np.arange(q, dtype=np.int64)[:, None]
    block = np.zeros((1, rows.shape[1]), dtype=np.int64)
    for row in rows:
        scaled = arith.mul(alphas, row[None, :])  # (q, N)
        block = arith.add(block[None, :, :], scaled[:, None, :]).reshape(-1, rows.shape[1])
    return block


def _basis(code: CodeInstance) -> np.ndarray:
    """Rows ``x^k g`` for ``0 <= k < dimension``; message coefficient k multiplies row k."""
    N, g = code.length, code.generator
    rows = np.zeros((code.dimension, N), dtype=np.int64)
    gv = np.array(g.coeffs, dtype=np.int64)
    for k in range(code.dimension):
        rows[k, k : k + len(gv)] = gv
    return rows


@dataclass
class ScanResult:
    min_weight: Optional[int]
    enumerated: int


def _message_digits(q: int, d: int) -> np.ndarray:
    """Row t holds the base-q digits of t, lowest first (odometer order)."""
    idx = np.arange(q**d, dtype=np.int64)
    return np.stack([(idx // q**k) % q for k in range(d)], axis=1) if d else idx[:, None][:, :0]


def exhaustive_scan(code: CodeInstance, cap: Optional[int] = DEFAULT_ORACLE_CAP) -> ScanResult:
    """Minimum weight over every nonzero codeword ``m(x) g(x)``, no early exit.

    Messages are split into a low block (the first coefficients, enumerated
    in full as one array) and a high part looped over in odometer order.  A
    coordinate of ``low + h`` vanishes iff ``low == -h``, so weights come from
    equality counts.  Scalar multiples share a weight, so only high parts
    whose last nonzero coefficient is 1 are visited; together with the
    all-zero high part this still accounts for all ``q^dim - 1`` codewords.
    """
    ctx = code.ctx
    q, dim, N = ctx.q, code.dimension, code.length
    if dim == 0:
        return ScanResult(None, 0)
    if cap is not None and q**dim > cap:
        raise SearchSpaceTooLarge(f"{q}^{dim} codewords exceed cap {cap}")
    arith = _Arith(ctx)
    rows = _basis(code)
    d_low = min(dim, max(1, int(math.log(_BLOCK_TARGET, q))))
    dtype = np.uint8 if q <= 256 else np.uint16
    low = _span(arith, rows[:d_low]).astype(dtype)
    best = N - int((low[1:] == 0).sum(axis=1).max()) if len(low) > 1 else None

    d_high = dim - d_low
    if d_high:
        digits = _message_digits(q, d_high)
        nz = digits != 0
        last = np.where(nz.any(axis=1), d_high - 1 - np.argmax(nz[:, ::-1], axis=1), -1)
        keep = last >= 0
        keep[keep] = digits[keep, last[keep]] == 1
        high = _span(arith, rows[d_low:])[keep]
        neg = np.array([ctx.neg(v) for v in range(q)], dtype=dtype)
        cols = np.ascontiguousarray(low.T)
        zeros = np.empty(len(low), dtype=np.uint8 if N < 256 else np.uint16)
        for h in neg[high]:
            zeros[:] = 0
            for k in range(N):
                zeros += cols[k] == h[k]
            m = N - int(zeros.max())
            best = m if best is None else min(best, m)
    return ScanResult(best, q**dim - 1)


def brute_force_min_distance(code: CodeInstance, cap: Optional[int] = DEFAULT_ORACLE_CAP) -> Optional[int]:
    """Minimum weight over all nonzero codewords; None for the zero code."""
    return exhaustive_scan(code, cap).min_weight


# -- support search ----------------------------------------------------------


def _syndromes(code: CodeInstance) -> np.ndarray:
    """Row k holds the coefficients of ``x^k mod g``."""
    ctx, g = code.ctx, code.generator
    r = int(g.degree)
    out = np.zeros((code.length, r), dtype=np.int64)
    cur = Polynomial.one(ctx) % g
    x = Polynomial.x(ctx)
    for k in range(code.length):
        out[k, : len(cur.coeffs)] = cur.coeffs
        cur = (cur * x) % g
    return out


def search_cost(code: CodeInstance, w: int) -> int:
    return math.comb(code.length, w) * (code.ctx.q - 1) ** (w - 1)


def low_weight_search(
    code: CodeInstance, max_weight: int, budget: Optional[int] = DEFAULT_SEARCH_BUDGET
) -> tuple[Optional[int], int]:
    """Smallest weight ``w <= max_weight`` carried by a nonzero codeword.

    Returns ``(w or None, last weight fully searched)``.  A codeword of weight
    ``w`` exists iff some ``w`` columns of the syndrome matrix are dependent
    with all coefficients nonzero; scaling makes the first coefficient 1.
    Raises SearchSpaceTooLarge before starting a weight whose cost exceeds
    the remaining budget; the exception carries ``searched`` (weights done).
    """
    if code.dimension == 0:
        return None, max_weight
    if code.generator.degree == 0:
        return (1 if max_weight >= 1 else None), max_weight
    arith = _Arith(code.ctx)
    S = _syndromes(code)
    q, N = code.ctx.q, code.length
    spent = 0
    for w in range(1, max_weight + 1):
        cost = search_cost(code, w)
        if budget is not None and spent + cost > budget:
            err = SearchSpaceTooLarge(f"weight-{w} search needs {cost} candidates")
            err.searched = w - 1
            raise err
        spent += cost
        combos = list(itertools.product(range(1, q), repeat=w - 1))
        coefs = np.array(combos, dtype=np.int64).reshape(len(combos), w - 1)
        for support in itertools.combinations(range(N), w):
            acc = np.broadcast_to(S[support[0]], (coefs.shape[0], S.shape[1]))
            for t, k in enumerate(support[1:]):
                acc = arith.add(acc, arith.mul(coefs[:, t : t + 1], S[k][None, :]))
            if (~acc.any(axis=1)).any():
                return w, w
    return None, max_weight


# -- reports -----------------------------------------------------------------


@dataclass
class OracleReport:
    descriptor: dict
    formula_distance: Optional[int]
    oracle_distance: Optional[int]
    agree: bool
    enumerated: int
    elapsed: float
    case: str = ""
    method: str = "full"
    lower_bound: Optional[int] = None
    upper_bound: Optional[int] = None
    lower_bound_source: Optional[str] = None

    @property
    def partial(self) -> bool:
        return self.method != "full"

    def to_dict(self, timing: bool = False) -> dict:
        d = asdict(self)
        d["partial"] = self.partial
        d["descriptor"] = {k: v for k, v in self.descriptor.items() if k != "generator"}
        if not timing:
            d.pop("elapsed")
        return d


def build_code(family: str, p: int, a: int, n: int, s: int, i: int, j: Optional[int] = None, element=None):
    if family == "single":
        return build_single(p, a, n, s, element, i)
    if family == "two":
        return build_two_factor(p, a, n, s, element, i, j)
    if family == "negacyclic":
        return build_negacyclic(p, a, s, i, j)
    raise OutOfRange(f"unknown family {family!r}")


def verify_code(
    code: CodeInstance,
    cap: Optional[int] = DEFAULT_ORACLE_CAP,
    max_dim: Optional[int] = None,
    budget: Optional[int] = DEFAULT_SEARCH_BUDGET,
) -> OracleReport:
    """Compare the formula against the oracle for one code.

    A full scan runs when ``q^dim <= cap`` and ``dim <= max_dim``.  Otherwise
    the certificate bounds the distance from above and a support search
    bounds it from below; the report is marked partial.
    """
    t0 = time.perf_counter()
    formula = distance_for(code)
    q, dim = code.ctx.q, code.dimension
    feasible = (cap is None or q**dim <= cap) and (max_dim is None or dim <= max_dim)
    if feasible:
        scan = exhaustive_scan(code, cap=None)
        return OracleReport(
            code.descriptor(), formula.value, scan.min_weight, formula.value == scan.min_weight,
            scan.enumerated, time.perf_counter() - t0, formula.case, "full", scan.min_weight, scan.min_weight, "scan",
        )

    cert = certificate_for(code, formula)
    upper = cert.weight() if is_codeword(code, cert) else None
    limit = (upper - 1) if upper is not None else code.length
    method, source = "low-weight", "support-search"
    try:
        found, searched = low_weight_search(code, limit, budget)
    except SearchSpaceTooLarge as err:
        found, searched, method = None, err.searched, "bounds"
    if found is not None:
        lower = upper = found
    else:
        lower = searched + 1
        if 0 < int(code.generator.degree) and lower < 2:
            # a proper nonzero ideal contains no unit multiple of x^k
            lower, source = 2, "lemma"
    oracle = lower if upper is not None and lower == upper else None
    return OracleReport(
        code.descriptor(), formula.value, oracle, oracle is not None and oracle == formula.value,
        0, time.perf_counter() - t0, formula.case, method, lower, upper, source,
    )


def verify_point(
    family: str, p: int, a: int, n: int, s: int, i: int, j: Optional[int] = None, element=None,
    cap: Optional[int] = DEFAULT_ORACLE_CAP, max_dim: Optional[int] = None,
    budget: Optional[int] = DEFAULT_SEARCH_BUDGET,
) -> OracleReport:
    """Build one code and compare formula with oracle; see ``verify_code``."""
    return verify_code(build_code(family, p, a, n, s, i, j, element), cap, max_dim, budget)


# -- inequality checks -------------------------------------------------------


def weight_retaining_check(g: Polynomial, n: int, gamma: FieldElement, N: int) -> bool:
    """``w(g (x^n+gamma)^N) >= w(g mod (x^n+gamma)) * w((x^n+gamma)^N)``."""
    ctx = g.ctx
    f = binomial_power(ctx, n, ctx.element(gamma).value, 1)
    power = binomial_power(ctx, n, ctx.element(gamma).value, N)
    return (g * power).weight() >= (g % f).weight() * power.weight()


def product_weight_check(ctx: FieldContext, n: int, gamma1, gamma2, i: int, s: int) -> bool:
    """``w((x^n+gamma1)^(p^s) (x^n+gamma2)^i) = 2 w((x^n+gamma2)^i)`` for ``0 < i < p^s``."""
    gamma1, gamma2 = ctx.element(gamma1), ctx.element(gamma2)
    if not (0 < i < ctx.p**s) or not gamma1 or not gamma2:
        raise OutOfRange("need 0 < i < p^s and nonzero constants")
    right = binomial_power(ctx, n, gamma2.value, i)
    left = binomial_power(ctx, n, gamma1.value, ctx.p**s) * right
    return left.weight() == 2 * right.weight()


def lemma_bound_check_two_factor(
    ctx: FieldContext, n: int, xi, s: int, i: int, j: int, i0: int, j0: int, g: Polynomial
) -> bool:
    """``w((x^n-xi)^(i0+i) (x^n+xi)^(j0+j) g) >= 2 w((x^(2n) - xi^2)^(j0+j))``.

    Hypotheses: ``i >= j``, ``i0 >= p^s - i``, ``j0 < p^s - j`` and ``g``
    coprime to both ``x^n - xi`` and ``x^n + xi``.
    """
    xi = ctx.element(xi)
    ps = ctx.p**s
    u = binomial_power(ctx, n, (-xi).value, 1)
    v = binomial_power(ctx, n, xi.value, 1)
    if not (i >= j and i0 >= ps - i and 0 <= j0 < ps - j) or not g:
        raise OutOfRange("hypotheses of the two-factor weight bound not met")
    if gcd(g, u).degree > 0 or gcd(g, v).degree > 0:
        raise OutOfRange("g must be coprime to x^n - xi and x^n + xi")
    c = binomial_power(ctx, n, (-xi).value, i0 + i) * binomial_power(ctx, n, xi.value, j0 + j) * g
    square = binomial_power(ctx, 2 * n, (-(xi * xi)).value, j0 + j)
    return c.weight() >= 2 * square.weight()


# -- seeded sweeps -----------------------------------------------------------

_SMALL_FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2)]
# (p, a, n, xi) with x^n - xi and x^n + xi both irreducible (checked on use)
_TWO_FACTOR_SETUPS = [(3, 1, 1, 1), (5, 1, 1, 2), (5, 1, 2, 2), (7, 1, 1, 3), (13, 1, 3, 2)]


def _random_poly(rng: random.Random, ctx: FieldContext, max_degree: int) -> Polynomial:
    d = rng.randint(0, max_degree)
    return Polynomial._raw(ctx, [rng.randrange(ctx.q) for _ in range(d + 1)])


def sweep_weight_retaining(seed: int, samples: int = 500) -> list[tuple]:
    """Return the violating samples among ``samples`` seeded draws."""
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        ctx = ff_construct(*rng.choice(_SMALL_FIELDS))
        n, N = rng.randint(1, 3), rng.randint(0, 100)
        gamma = FieldElement(ctx, rng.randrange(1, ctx.q))
        g = _random_poly(rng, ctx, 6)
        if not weight_retaining_check(g, n, gamma, N):
            bad.append((ctx, n, gamma, N, g))
    return bad


def sweep_product_weight(seed: int, samples: int = 200) -> list[tuple]:
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        ctx = ff_construct(*rng.choice(_SMALL_FIELDS))
        s = rng.randint(1, 3 if ctx.p < 5 else 2)
        n, i = rng.randint(1, 3), rng.randint(1, ctx.p**s - 1)
        g1, g2 = rng.randrange(1, ctx.q), rng.randrange(1, ctx.q)
        if not product_weight_check(ctx, n, FieldElement(ctx, g1), FieldElement(ctx, g2), i, s):
            bad.append((ctx, n, g1, g2, i, s))
    return bad


def sweep_lemma_bound(seed: int, samples: int = 200) -> list[tuple]:
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        p, a, n, xi = rng.choice(_TWO_FACTOR_SETUPS)
        ctx = ff_construct(p, a)
        s = rng.randint(1, 2 if p < 7 else 1)
        ps = p**s
        j = rng.randint(0, ps - 1)
        i = rng.randint(j, ps)
        i0 = rng.randint(ps - i, ps - i + 2)
        j0 = rng.randint(0, ps - j - 1)
        u = Polynomial.binomial(ctx, n, -ctx.element(xi))
        v = Polynomial.binomial(ctx, n, ctx.element(xi))
        while True:
            g = _random_poly(rng, ctx, 3)
            if g and gcd(g, u).degree == 0 and gcd(g, v).degree == 0:
                break
        if not lemma_bound_check_two_factor(ctx, n, xi, s, i, j, i0, j0, g):
            bad.append((p, a, n, xi, s, i, j, i0, j0, g))
    return bad
