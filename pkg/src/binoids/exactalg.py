"""Exact integer linear algebra.

Smith normal form with unimodular certificates, cokernels, cohomology of
complexes of free abelian groups, and universal-coefficient evaluation
for symbolic coefficient groups.  All arithmetic uses Python's
arbitrary-precision integers; nothing here ever touches floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import CompositionNonzero


@dataclass(frozen=True)
class IntMatrix:
    """An immutable integer matrix.

    >>> A = IntMatrix.from_rows([[1, 2], [3, 4]])
    >>> (A * IntMatrix.identity(2)).to_lists()
    [[1, 2], [3, 4]]
    """

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("column count mismatch")
            for x in row:
                if not isinstance(x, int):
                    raise ValueError("entries must be exact integers")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: Optional[int] = None) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
        elif cols is not None:
            width = cols
        else:
            width = 0
        return cls(len(data), width, data)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def to_lists(self) -> list:
        return [list(row) for row in self.entries]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        cols = tuple(other.column(j) for j in range(other.cols))
        data = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
            for row in self.entries
        )
        return IntMatrix(self.rows, other.cols, data)

    def apply(self, vector: Iterable[int]) -> tuple:
        vec = tuple(vector)
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.entries)


@dataclass(frozen=True)
class SmithDecomposition:
    """U * A * V = S with U, V unimodular and S the invariant-factor diagonal."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    def diagonal(self) -> tuple:
        return tuple(self.S.entry(i, i) for i in range(min(self.S.rows, self.S.cols)))

    def rank(self) -> int:
        return sum(1 for d in self.diagonal() if d != 0)


def _canonical_torsion(factors: Iterable[int]) -> tuple:
    """Invariant factors (each >= 2, divisibility chain) of ⊕ Z/f."""
    factors = [abs(int(f)) for f in factors]
    if any(f == 0 for f in factors):
        raise ValueError("torsion orders must be nonzero")
    # merge by prime powers, then rebuild the chain largest-first
    powers = {}
    for f in factors:
        n, p = f, 2
        while p * p <= n:
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                powers.setdefault(p, []).append(e)
            p += 1
        if n > 1:
            powers.setdefault(n, []).append(1)
    for exps in powers.values():
        exps.sort(reverse=True)
    length = max((len(v) for v in powers.values()), default=0)
    chain = []
    for i in range(length):
        d = 1
        for p, exps in powers.items():
            if i < len(exps):
                d *= p ** exps[i]
        chain.append(d)
    return tuple(reversed(chain))


@dataclass(frozen=True)
class FinAbGroup:
    """A finitely generated abelian group Z^free_rank ⊕ ⊕ Z/d_i in canonical form.

    >>> FinAbGroup.from_torsion([2, 3])
    FinAbGroup(free_rank=0, invariant_factors=(6,))
    >>> str(FinAbGroup(1, (2, 4)))
    'Z + Z/2 + Z/4'
    """

    free_rank: int
    invariant_factors: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        factors = tuple(self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        for d in factors:
            if not isinstance(d, int) or d < 2:
                raise ValueError("invariant factors must be integers >= 2")
        for a, b in zip(factors, factors[1:]):
            if b % a != 0:
                raise ValueError("invariant factors must form a divisibility chain")

    @classmethod
    def from_torsion(cls, factors: Iterable[int], free_rank: int = 0) -> "FinAbGroup":
        chain = tuple(d for d in _canonical_torsion(factors) if d > 1)
        return cls(free_rank, chain)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def torsion_order(self) -> int:
        return math.prod(self.invariant_factors)

    def direct_sum(self, other: "FinAbGroup") -> "FinAbGroup":
        return FinAbGroup.from_torsion(
            self.invariant_factors + other.invariant_factors,
            self.free_rank + other.free_rank,
        )

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append("Z^%d" % self.free_rank)
        parts.extend("Z/%d" % d for d in self.invariant_factors)
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.invariant_factors)}


TRIVIAL_GROUP = FinAbGroup(0)


@dataclass(frozen=True)
class GroupExpr:
    """G^free_power ⊕ ⊕ G/dG ⊕ ⊕ G[b] for an abstract abelian group G.

    The symbolic pieces are never simplified: what G/dG and G[b] look like
    depends on G, so they stay as data until `evaluate` is given a concrete
    group (Z, or Z/m for test oracles).

    >>> GroupExpr("K*", 0, (), (2,)).evaluate(4)
    FinAbGroup(free_rank=0, invariant_factors=(2,))
    """

    symbol: str
    free_power: int
    cotorsion: tuple = ()
    torsion_sub: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "cotorsion", tuple(self.cotorsion))
        object.__setattr__(self, "torsion_sub", tuple(self.torsion_sub))
        if self.free_power < 0:
            raise ValueError("free power must be nonnegative")

    @property
    def is_trivial(self) -> bool:
        return self.free_power == 0 and not self.cotorsion and not self.torsion_sub

    def evaluate(self, modulus: Optional[int] = None) -> FinAbGroup:
        """The group at G = Z (modulus None) or G = Z/modulus."""
        if modulus is None:
            # Z/dZ = Z/d, Z[b] = 0
            return FinAbGroup.from_torsion(self.cotorsion, self.free_power)
        if modulus < 1:
            raise ValueError("modulus must be positive")
        factors = [modulus] * self.free_power
        factors.extend(math.gcd(d, modulus) for d in self.cotorsion)
        factors.extend(math.gcd(b, modulus) for b in self.torsion_sub)
        return FinAbGroup.from_torsion(f for f in factors if f > 1)

    def __str__(self) -> str:
        parts = []
        if self.free_power == 1:
            parts.append(self.symbol)
        elif self.free_power > 1:
            parts.append("(%s)^%d" % (self.symbol, self.free_power))
        parts.extend("%s/%d" % (self.symbol, d) for d in self.cotorsion)
        parts.extend("%s[%d]" % (self.symbol, b) for b in self.torsion_sub)
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "symbol": self.symbol,
            "free": self.free_power,
            "cotorsion": list(self.cotorsion),
            "torsion_sub": list(self.torsion_sub),
        }


# ---------------------------------------------------------------------------
# Smith normal form


def _smith_with_inverse(A: IntMatrix):
    """Lists (U, S, V, Vinv) with U*A*V = S and Vinv = V^{-1}.

    Pivot choice: smallest nonzero absolute value in the remaining
    submatrix, which keeps intermediate entries modest at this scale.
    """
    m, n = A.rows, A.cols
    S = A.to_lists()
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    Vinv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_op(dst, src, q):
        S[dst] = [a + q * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def col_op(dst, src, q):
        for i in range(m):
            S[i][dst] += q * S[i][src]
        for i in range(n):
            V[i][dst] += q * V[i][src]
        Vinv[src] = [a - q * b for a, b in zip(Vinv[src], Vinv[dst])]

    def swap_rows(i, j):
        if i != j:
            S[i], S[j] = S[j], S[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in S:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]
            Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def negate_row(i):
        S[i] = [-a for a in S[i]]
        U[i] = [-a for a in U[i]]

    def smallest_pivot(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(S[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        return best

    t = 0
    while t < min(m, n):
        best = smallest_pivot(t)
        if best is None:
            break
        # isolate a pivot at (t, t)
        while True:
            _, i, j = best
            swap_rows(t, i)
            swap_cols(t, j)
            for i in range(t + 1, m):
                q = S[i][t] // S[t][t]
                if q:
                    row_op(i, t, -q)
            for j in range(t + 1, n):
                q = S[t][j] // S[t][t]
                if q:
                    col_op(j, t, -q)
            if all(S[i][t] == 0 for i in range(t + 1, m)) and all(
                S[t][j] == 0 for j in range(t + 1, n)
            ):
                break
            best = smallest_pivot(t)
        # the pivot must divide every remaining entry
        offender = None
        for i in range(t + 1, m):
            if any(S[i][j] % S[t][t] for j in range(t + 1, n)):
                offender = i
                break
        if offender is not None:
            row_op(t, offender, 1)
            continue
        if S[t][t] < 0:
            negate_row(t)
        t += 1
    return U, S, V, Vinv


def smith_normal_form(A: IntMatrix) -> SmithDecomposition:
    """Smith normal form with unimodular certificates.

    >>> dec = smith_normal_form(IntMatrix.from_rows([[2, 4], [6, 8]]))
    >>> dec.diagonal()
    (2, 4)
    """
    U, S, V, _ = _smith_with_inverse(A)
    return SmithDecomposition(
        IntMatrix.from_rows(U, cols=A.rows),
        IntMatrix.from_rows(S, cols=A.cols),
        IntMatrix.from_rows(V, cols=A.cols),
    )


def cokernel(A: IntMatrix) -> FinAbGroup:
    """Z^rows modulo the column span of A, in canonical form.

    >>> cokernel(IntMatrix.from_rows([[2, 0], [0, 3]]))
    FinAbGroup(free_rank=0, invariant_factors=(6,))
    """
    dec = smith_normal_form(A)
    diag = [d for d in dec.diagonal() if d != 0]
    return FinAbGroup(A.rows - len(diag), tuple(d for d in diag if d > 1))


def kernel_basis(A: IntMatrix) -> IntMatrix:
    """Columns forming a lattice basis of ker(A: Z^cols -> Z^rows)."""
    _, S, V, _ = _smith_with_inverse(A)
    m, n = A.rows, A.cols
    cols = [j for j in range(n) if j >= min(m, n) or S[j][j] == 0]
    data = tuple(tuple(V[i][j] for j in cols) for i in range(n))
    return IntMatrix(n, len(cols), data)


def column_lattice_basis(A: IntMatrix) -> IntMatrix:
    """A basis (as columns) of the subgroup of Z^rows spanned by A's columns."""
    U, S, _, _ = _smith_with_inverse(A)
    diag = [S[i][i] for i in range(min(A.rows, A.cols))]
    r = sum(1 for d in diag if d != 0)
    # columns of U^{-1} * S: invert the row operations on the standard basis
    Uinv = _invert_unimodular_rows(U)
    data = tuple(tuple(Uinv[i][k] * diag[k] for k in range(r)) for i in range(A.rows))
    return IntMatrix(A.rows, r, data)


def _invert_unimodular_rows(U: list) -> list:
    n = len(U)
    A = IntMatrix.from_rows(U, cols=n)
    P, S, Q, _ = _smith_with_inverse(A)
    if any(S[i][i] != 1 for i in range(n)):
        raise ValueError("matrix is not unimodular")
    # P*U*Q = I => U^{-1} = Q*P
    return [
        [sum(Q[i][k] * P[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def solve_columns(B: IntMatrix, C: IntMatrix) -> IntMatrix:
    """The unique integer X with B*X = C, for B of full column rank.

    Raises ValueError when no integer solution exists.
    """
    U_, S_, V_, _ = _smith_with_inverse(B)
    m, k = B.rows, B.cols
    a = C.cols
    if C.rows != m:
        raise ValueError("shape mismatch")
    UC = [
        [sum(U_[i][t] * C.entry(t, j) for t in range(m)) for j in range(a)]
        for i in range(m)
    ]
    Z = [[0] * a for _ in range(k)]
    for i in range(m):
        s = S_[i][i] if i < k else 0
        for j in range(a):
            if s != 0:
                if UC[i][j] % s:
                    raise ValueError("no integer solution")
                Z[i][j] = UC[i][j] // s
            elif UC[i][j] != 0:
                raise ValueError("no integer solution")
    if k > m or any(S_[i][i] == 0 for i in range(k)):
        raise ValueError("matrix does not have full column rank")
    X = [
        [sum(V_[i][t] * Z[t][j] for t in range(k)) for j in range(a)]
        for i in range(k)
    ]
    return IntMatrix.from_rows(X, cols=a)


def complex_cohomology(d_in: IntMatrix, d_out: IntMatrix) -> FinAbGroup:
    """ker(d_out)/im(d_in) for one position of a complex Z^a -> Z^b -> Z^c.

    >>> d = IntMatrix.from_rows([[1, -1], [0, 2]])
    >>> complex_cohomology(d, IntMatrix.zero(0, 2))
    FinAbGroup(free_rank=0, invariant_factors=(2,))
    """
    b = d_in.rows
    if d_out.cols != b:
        raise ValueError("differentials do not share the middle group")
    if not (d_out * d_in).is_zero():
        raise CompositionNonzero("d_out * d_in is not zero")
    if b == 0:
        return TRIVIAL_GROUP
    _, S, _, Vinv = _smith_with_inverse(d_out)
    c = d_out.rows
    kernel_cols = [j for j in range(b) if j >= min(c, b) or S[j][j] == 0]
    # coordinates of im(d_in) in the kernel basis are the kernel rows of V^{-1} d_in
    a = d_in.cols
    kernel_set = set(kernel_cols)
    rows = []
    for i in kernel_cols:
        rows.append([sum(Vinv[i][t] * d_in.entry(t, j) for t in range(b)) for j in range(a)])
    # non-kernel coordinates vanish because the image lies in the kernel
    for i in range(b):
        if i not in kernel_set:
            for j in range(a):
                coord = sum(Vinv[i][t] * d_in.entry(t, j) for t in range(b))
                if coord != 0:
                    raise CompositionNonzero("image does not lie in the kernel")
    return cokernel(IntMatrix.from_rows(rows, cols=a))


def cohomology_of_complex(ranks: list, diffs: list) -> list:
    """Cohomology groups of a cochain complex given by ranks and differentials.

    diffs[j] maps Z^ranks[j] -> Z^ranks[j+1]; the ends are padded with
    zero maps.
    """
    if len(diffs) != max(len(ranks) - 1, 0):
        raise ValueError("need exactly one differential between consecutive groups")
    out = []
    for j, rank in enumerate(ranks):
        d_in = diffs[j - 1] if j > 0 else IntMatrix.zero(rank, 0)
        d_out = diffs[j] if j < len(diffs) else IntMatrix.zero(0, rank)
        out.append(complex_cohomology(d_in, d_out))
    return out


def coefficient_cohomology(h_here: FinAbGroup, h_next: FinAbGroup, symbol: str) -> GroupExpr:
    """H^j(C; G) from the integer cohomology in degrees j and j+1.

    For a complex of free abelian groups, universal coefficients give
    H^j(C; G) = G^f ⊕ ⊕ G/dG ⊕ ⊕ G[b] with f, d, b read off H^j(C; Z)
    and the torsion of H^{j+1}(C; Z).
    """
    return GroupExpr(
        symbol,
        h_here.free_rank,
        h_here.invariant_factors,
        h_next.invariant_factors,
    )
