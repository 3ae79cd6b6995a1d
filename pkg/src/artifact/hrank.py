"""Generic Hadamard ranks of rank varieties via tangent spaces.

The tangent space of the s-th Hadamard power of the variety ``X_r`` of
``m x n`` matrices of rank <= r, at a product ``A_1 * ... * A_s`` of random
rank-r points, is spanned by the tangent spaces at each ``A_k`` scaled
entrywise by the product of the other points.  The rank of that span is
``1 + dim`` of the power at the sample, so the generic Hadamard rank is the
first ``s`` where the span fills all ``m * n`` coordinates.

Prime-field ranks never exceed the characteristic-0 rank, so a full-rank
sample is a certificate; the reported value is the maximum over trials.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .arith import DEFAULT_PRIME, GF, QQ, Field
from .matham import HrankBounds, Matrix, hrank_bounds, rank

log = logging.getLogger(__name__)

TABLE_PRIMES = (32003, 65537, 1000003)
MAX_RESAMPLES = 100


def rank_mod_p(M: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over ``F_p`` by Gaussian elimination."""
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    if rows > cols:
        A = np.ascontiguousarray(A.T)
        rows, cols = cols, rows
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        below = A[r + 1:, c]
        idx = np.flatnonzero(below)
        if idx.size:
            rows_idx = idx + r + 1
            A[rows_idx] = (A[rows_idx] - np.outer(below[idx], A[r])) % p
        r += 1
    return r


def span_rank(vectors: np.ndarray, field: Field) -> int:
    if field.is_prime:
        return rank_mod_p(vectors, field.characteristic)
    return rank(Matrix([[Fraction(int(v)) for v in row] for row in vectors], QQ))


@dataclass(frozen=True)
class RankVarietyPoint:
    """``A = U V^T`` with ``U`` of shape (m, r), ``V`` of shape (n, r), rank exactly r."""

    U: np.ndarray
    V: np.ndarray
    A: np.ndarray
    field: Field


@dataclass(frozen=True)
class TangentSpan:
    ambient: int
    vectors: np.ndarray  # shape (count, ambient), rows flattened row-major

    def rank(self, field: Field) -> int:
        return span_rank(self.vectors, field)


def _seed(seed) -> list[int]:
    if isinstance(seed, (tuple, list)):
        return [int(s) for s in seed]
    return [int(seed)]


def random_point(m: int, n: int, r: int, seed=0, field: Field | None = None) -> RankVarietyPoint:
    """Seeded random point of rank exactly ``r``.

    Over ``F_p`` the factor entries are uniform nonzero residues; over the
    rationals they are integers in ``[-99, 99]``.
    """
    field = field or GF(DEFAULT_PRIME)
    if not 1 <= r <= min(m, n):
        raise ValueError(f"need 1 <= r <= min(m, n), got r = {r}")
    rng = np.random.default_rng(_seed(seed))
    for _ in range(MAX_RESAMPLES):
        if field.is_prime:
            p = field.characteristic
            U = rng.integers(1, p, size=(m, r), dtype=np.int64)
            V = rng.integers(1, p, size=(n, r), dtype=np.int64)
            A = (U[:, :, None] * V.T[None, :, :] % p).sum(axis=1) % p
        else:
            U = rng.integers(-99, 100, size=(m, r)).astype(object)
            V = rng.integers(-99, 100, size=(n, r)).astype(object)
            A = U.dot(V.T)
        if span_rank(A, field) == r:
            return RankVarietyPoint(U, V, A, field)
    raise RuntimeError(f"no rank-{r} sample after {MAX_RESAMPLES} tries")


def tangent_basis(point: RankVarietyPoint) -> TangentSpan:
    """Spanning set ``{u_i e_j^T} u {e_i v_j^T}`` of the tangent space at ``A``."""
    U, V = point.U, point.V
    m, r = U.shape
    n = V.shape[0]
    dtype = U.dtype
    vecs = []
    for i in range(r):
        for j in range(n):
            M = np.zeros((m, n), dtype=dtype)
            M[:, j] = U[:, i]
            vecs.append(M.ravel())
    for i in range(m):
        for j in range(r):
            M = np.zeros((m, n), dtype=dtype)
            M[i, :] = V[:, j]
            vecs.append(M.ravel())
    return TangentSpan(m * n, np.array(vecs, dtype=dtype))


def _entrywise_product(mats: Sequence[np.ndarray], shape, field: Field) -> np.ndarray:
    if field.is_prime:
        out = np.ones(shape, dtype=np.int64)
        for M in mats:
            out = out * M % field.characteristic
        return out
    out = np.ones(shape, dtype=object)
    for M in mats:
        out = out * M
    return out


def power_tangent_rank(m: int, n: int, r: int, s: int, seed=0, field: Field | None = None) -> int:
    """Rank of the tangent span of ``X_r^{*s}`` at a seeded random product point."""
    field = field or GF(DEFAULT_PRIME)
    if s < 1:
        raise ValueError("power must be at least 1")
    base = _seed(seed)
    points = [random_point(m, n, r, base + [k], field) for k in range(s)]
    blocks = []
    for k, pt in enumerate(points):
        B = _entrywise_product([q.A for j, q in enumerate(points) if j != k], (m, n), field)
        T = tangent_basis(pt).vectors * B.ravel()[None, :]
        if field.is_prime:
            T = T % field.characteristic
        blocks.append(T)
    return span_rank(np.vstack(blocks), field)


def generic_rank(m: int, n: int, r: int, trials: int = 3, seed: int = 0, field: Field | None = None) -> int:
    """Smallest ``s`` whose Hadamard power of ``X_r`` fills ``P(Mat_{m,n})``.

    ``s`` is searched between the log lower bound and the row-block upper
    bound; each ``s`` is tried on ``trials`` seeded samples.
    """
    field = field or GF(DEFAULT_PRIME)
    k = min(m, n)
    if r >= k:
        return 1
    if r < 2:
        raise ValueError("rank-1 matrices are closed under Hadamard products; r must be >= 2")
    bounds = hrank_bounds(m, n, r)
    for s in range(max(bounds.lower, 1), bounds.upper + 1):
        for t in range(trials):
            if power_tangent_rank(m, n, r, s, (seed, m, n, r, s, t), field) == m * n:
                return s
    log.warning("no full-rank sample up to the upper bound for (%d, %d, %d)", m, n, r)
    return bounds.upper


def expected_dim(m: int, n: int, r: int, s: int) -> int:
    """Expected projective dimension of ``X_r^{*s}``."""
    if s < 1 or not 1 <= r <= min(m, n):
        raise ValueError("parameters out of range")
    return min(s * r * (m + n - r) - (s - 1) * (m + n - 1), m * n) - 1


def expected_generic_rank(m: int, n: int, r: int) -> int:
    num = m * n - (m + n - 1)
    den = r * (m + n - r) - m - n + 1
    if den <= 0:
        raise ValueError(f"expected rank undefined for r = {r} (denominator {den})")
    return -(-num // den)


@dataclass(frozen=True)
class TableRow:
    n: int
    r: int
    computed: int
    expected: int
    lower: int
    upper: int

    @property
    def agrees(self) -> bool:
        return self.computed == self.expected

    def as_tuple(self) -> tuple[int, ...]:
        return (self.n, self.r, self.computed, self.expected, self.lower, self.upper)


def table_cells(n_lo: int, n_hi: int) -> list[tuple[int, int]]:
    """Square sizes with ``2 <= r < (n + 2) / 2``."""
    if not 3 <= n_lo <= n_hi:
        raise ValueError("need 3 <= n_lo <= n_hi")
    return [(n, r) for n in range(n_lo, n_hi + 1) for r in range(2, n + 1) if 2 * r < n + 2]


def _row(args) -> TableRow:
    n, r, trials, seed, p = args
    field = GF(p) if p else QQ
    b: HrankBounds = hrank_bounds(n, n, r)
    computed = generic_rank(n, n, r, trials, seed, field)
    return TableRow(n, r, computed, expected_generic_rank(n, n, r), b.lower, b.upper)


def rank_table(
    n_lo: int,
    n_hi: int,
    trials: int = 3,
    seed: int = 0,
    prime: int | None = DEFAULT_PRIME,
    workers: int = 1,
) -> list[TableRow]:
    """Generic Hadamard ranks of square matrices, one row per ``(n, r)``.

    ``prime=None`` computes over the rationals.  Rows come back sorted by
    ``(n, r)`` regardless of ``workers``.
    """
    jobs = [(n, r, trials, seed, prime) for n, r in table_cells(n_lo, n_hi)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_row, jobs))
    else:
        rows = [_row(j) for j in jobs]
    for row in rows:
        if not row.agrees:
            log.warning("n=%d r=%d: computed %d, expected %d", row.n, row.r, row.computed, row.expected)
    return sorted(rows, key=lambda row: (row.n, row.r))


TABLE_HEADER = ("n", "r", "computed", "expected", "lower", "upper")


def format_table(rows: Iterable[TableRow], csv: bool = False) -> str:
    data = [row.as_tuple() for row in rows]
    if csv:
        return "\n".join([",".join(TABLE_HEADER)] + [",".join(map(str, d)) for d in data]) + "\n"
    widths = [max(len(h), *(len(str(d[i])) for d in data)) if data else len(h)
              for i, h in enumerate(TABLE_HEADER)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(TABLE_HEADER, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(str(v).rjust(w) for v, w in zip(d, widths)) for d in data]
    return "\n".join(lines) + "\n"
