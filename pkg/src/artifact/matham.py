"""Hadamard (entrywise) matrix algebra over exact fields.

Includes exact rank, the Kronecker-submatrix identity, the two
constructive Hadamard decompositions (row blocks, and the two-factor
decomposition of 3 x n matrices into rank <= 2 factors), Hadamard rank
bounds, and rescaling of a decomposition by rank-one matrices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .arith import QQ, Field, Scalar


class Matrix:
    """Dense immutable matrix of raw field values."""

    __slots__ = ("rows", "field")

    def __init__(self, rows: Sequence[Sequence], field: Field = QQ):
        norm = field.normalize
        rows = tuple(tuple(norm(v.value if isinstance(v, Scalar) else v) for v in r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix rows")
        self.rows = rows
        self.field = field

    @classmethod
    def from_rows(cls, rows, field: Field = QQ) -> Matrix:
        return cls(rows, field)

    @classmethod
    def ones(cls, m: int, n: int, field: Field = QQ) -> Matrix:
        return cls([[1] * n for _ in range(m)], field)

    @classmethod
    def zeros(cls, m: int, n: int, field: Field = QQ) -> Matrix:
        return cls([[0] * n for _ in range(m)], field)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> Matrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], field)

    @classmethod
    def from_text(cls, text: str, field: Field = QQ) -> Matrix:
        from .parsing import parse_matrix_rows

        return cls(parse_matrix_rows(text), field)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def scalar(self, i: int, j: int) -> Scalar:
        return Scalar(self.field, self.rows[i][j])

    def transpose(self) -> Matrix:
        return Matrix(list(zip(*self.rows)), self.field)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.field, self.rows))

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        return Matrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows], self.field)

    def __mul__(self, other: Matrix) -> Matrix:
        return hadamard(self, other)

    def rank(self) -> int:
        return rank(self)

    def inverse(self) -> Matrix:
        m, n = self.shape
        if m != n:
            raise ValueError("only square matrices have inverses")
        f = self.field
        aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(self.rows)]
        aug = [[f.normalize(v) for v in r] for r in aug]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = f.inv(aug[col][col])
            aug[col] = [f.normalize(v * inv) for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    c = aug[r][col]
                    aug[r] = [f.normalize(a - c * b) for a, b in zip(aug[r], aug[col])]
        return Matrix([r[n:] for r in aug], f)

    def to_text(self) -> str:
        return ";".join(",".join(self.field.to_text(v) for v in r) for r in self.rows)

    def pretty(self) -> str:
        cells = [[self.field.to_text(v) for v in r] for r in self.rows]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    def __repr__(self) -> str:
        return f"Matrix({self.to_text()!r})"


def _check_shapes(A: Matrix, B: Matrix) -> None:
    if A.shape != B.shape:
        raise ValueError(f"shape mismatch: {A.shape} vs {B.shape}")
    if A.field != B.field:
        raise ValueError(f"field mismatch: {A.field!r} vs {B.field!r}")


def hadamard(A: Matrix, B: Matrix) -> Matrix:
    _check_shapes(A, B)
    return Matrix([[a * b for a, b in zip(ra, rb)] for ra, rb in zip(A.rows, B.rows)], A.field)


def hadamard_product(factors: Sequence[Matrix]) -> Matrix:
    if not factors:
        raise ValueError("empty product")
    out = factors[0]
    for F in factors[1:]:
        out = hadamard(out, F)
    return out


def hadamard_inverse(A: Matrix) -> Matrix:
    f = A.field
    if any(v == 0 for r in A.rows for v in r):
        raise ZeroDivisionError("Hadamard inverse needs all entries nonzero")
    return Matrix([[f.inv(v) for v in r] for r in A.rows], f)


def rank(A: Matrix) -> int:
    """Rank by exact Gaussian elimination."""
    f = A.field
    rows = [list(r) for r in A.rows]
    m, n = A.shape
    rk = 0
    for col in range(n):
        piv = next((r for r in range(rk, m) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        inv = f.inv(rows[rk][col])
        prow = rows[rk]
        for r in range(rk + 1, m):
            c = rows[r][col]
            if c != 0:
                c = c * inv
                rows[r] = [f.normalize(a - c * b) for a, b in zip(rows[r], prow)]
        rk += 1
        if rk == m:
            break
    return rk


def kronecker(A: Matrix, B: Matrix) -> Matrix:
    (m1, n1), (m2, n2) = A.shape, B.shape
    rows = []
    for i in range(m1):
        for h in range(m2):
            rows.append([A.rows[i][j] * B.rows[h][k] for j in range(n1) for k in range(n2)])
    return Matrix(rows, A.field)


def kronecker_restriction_check(A: Matrix, B: Matrix) -> bool:
    """Whether ``A * B`` equals ``A (x) B`` restricted to rows ``1, m+2, 2m+3, ...``
    and columns ``1, n+2, 2n+3, ...``."""
    _check_shapes(A, B)
    m, n = A.shape
    K = kronecker(A, B)
    rows_idx = [i * (m + 1) for i in range(m)]
    cols_idx = [j * (n + 1) for j in range(n)]
    restricted = Matrix([[K.rows[i][j] for j in cols_idx] for i in rows_idx], A.field)
    return restricted == hadamard(A, B)


@dataclass(frozen=True)
class HadamardDecomposition:
    target: Matrix
    factors: tuple[Matrix, ...]
    rank_cap: int

    def product(self) -> Matrix:
        return hadamard_product(self.factors)

    def factor_ranks(self) -> list[int]:
        return [F.rank() for F in self.factors]

    def validate(self) -> None:
        """Raise ``ValueError`` unless the decomposition invariants hold."""
        if not self.factors:
            raise ValueError("decomposition has no factors")
        if self.product() != self.target:
            raise ValueError("factors do not multiply to the target")
        ranks = self.factor_ranks()
        if max(ranks) > self.rank_cap:
            raise ValueError(f"factor ranks {ranks} exceed cap {self.rank_cap}")

    def is_valid(self) -> bool:
        try:
            self.validate()
        except ValueError:
            return False
        return True


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def decompose_blocks(M: Matrix, r: int) -> HadamardDecomposition:
    """Row-block decomposition into ``ceil(min(m, n) / (r - 1))`` factors of rank <= r.

    Factor ``k`` carries ``r - 1`` consecutive rows of ``M`` and rows of ones
    elsewhere; columns are used instead when ``n < m``.
    """
    if r < 2:
        raise ValueError("rank cap must be at least 2")
    m, n = M.shape
    if n < m:
        D = decompose_blocks(M.transpose(), r)
        return HadamardDecomposition(M, tuple(F.transpose() for F in D.factors), r)
    one = M.field.one
    ones_row = (one,) * n
    factors = []
    for k in range(_ceil_div(m, r - 1)):
        lo, hi = (r - 1) * k, min((r - 1) * (k + 1), m)
        factors.append(Matrix([M.rows[i] if lo <= i < hi else ones_row for i in range(m)], M.field))
    return HadamardDecomposition(M, tuple(factors), r)


def decompose_two_factors_3xn(M: Matrix) -> HadamardDecomposition:
    """Write a 3 x n matrix as a Hadamard product of at most two rank <= 2 matrices.

    Columns where the first two rows both vanish are patched to ones in the
    first two rows of the first factor and masked by zeros in the second.
    The third row of the first factor is ``v1 + mu * v2`` (patched rows)
    with the smallest ``mu = 0, 1, 2, ...`` making every entry nonzero.
    """
    m, n = M.shape
    if m != 3:
        raise ValueError(f"expected exactly 3 rows, got {m}")
    if M.rank() <= 2:
        return HadamardDecomposition(M, (M,), 2)
    f = M.field
    v1, v2, v3 = M.rows
    mask = [0 if (a == 0 and b == 0) else 1 for a, b in zip(v1, v2)]
    t1 = [a if u else f.one for a, u in zip(v1, mask)]
    t2 = [b if u else f.one for b, u in zip(v2, mask)]
    lam = f.one
    mu = 0
    while True:
        w = [f.normalize(lam * a + mu * b) for a, b in zip(t1, t2)]
        if all(x != 0 for x in w):
            break
        mu += 1
        if f.is_prime and mu >= f.characteristic:
            raise ArithmeticError("no admissible mu in this field")
    A = Matrix([t1, t2, w], f)
    B = Matrix([mask, mask, [f.div(c, x) for c, x in zip(v3, w)]], f)
    return HadamardDecomposition(M, (A, B), 2)


def decompose(M: Matrix, r: int) -> HadamardDecomposition:
    """Two-factor construction for 3-row/3-column inputs at r = 2, row blocks otherwise."""
    m, n = M.shape
    if r == 2 and m == 3 and n >= 3:
        return decompose_two_factors_3xn(M)
    if r == 2 and n == 3 and m > 3:
        D = decompose_two_factors_3xn(M.transpose())
        return HadamardDecomposition(M, tuple(F.transpose() for F in D.factors), 2)
    return decompose_blocks(M, r)


class HrankBounds(NamedTuple):
    lower: int
    upper: int
    exact: int | None


def hrank_bounds(m: int, n: int, r: int) -> HrankBounds:
    """Lower bound ``ceil(log_r min)``, upper bound ``ceil(min / (r - 1))`` and,
    where known, the exact generic Hadamard rank."""
    k = min(m, n)
    if not 2 <= r <= k:
        raise ValueError(f"need 2 <= r <= min(m, n) = {k}, got r = {r}")
    lower, power = 0, 1
    while power < k:
        power *= r
        lower += 1
    upper = _ceil_div(k, r - 1)
    exact = None
    if r == k:
        exact = 1
    elif r == k - 1 or Fraction(k + 2, 2) < r:
        exact = 2
    elif lower == upper:
        exact = lower
    return HrankBounds(lower, upper, exact)


def random_rank_one_nonzero(m: int, n: int, rng: random.Random, field: Field) -> Matrix:
    def draw():
        if field.is_prime:
            return rng.randrange(1, field.characteristic)
        return rng.choice((-1, 1)) * rng.randint(1, 9)

    a = [draw() for _ in range(m)]
    b = [draw() for _ in range(n)]
    return Matrix([[x * y for y in b] for x in a], field)


def scramble(D: HadamardDecomposition, seed: int) -> HadamardDecomposition:
    """Another decomposition of the same target: rescale factors by rank-one
    matrices ``R_k`` and the last factor by the Hadamard inverse of their product."""
    s = len(D.factors)
    if s < 2:
        raise ValueError("scrambling needs at least two factors")
    rng = random.Random(seed)
    m, n = D.target.shape
    Rs = [random_rank_one_nonzero(m, n, rng, D.target.field) for _ in range(s - 1)]
    new = [hadamard(R, F) for R, F in zip(Rs, D.factors)]
    new.append(hadamard(hadamard_inverse(hadamard_product(Rs)), D.factors[-1]))
    return HadamardDecomposition(D.target, tuple(new), D.rank_cap)
