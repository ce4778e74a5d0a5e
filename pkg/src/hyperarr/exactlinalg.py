"""Exact rational linear algebra on small vectors and subspaces.

Everything here is arbitrary-precision and deterministic: integer covectors in a
canonical primitive form, fraction-free integer row echelon for ranks and
membership tests, and a canonical reduced-row-echelon basis type for subspaces
of Q^n.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


def canonicalize(vector: Sequence[int | Fraction]) -> tuple[int, ...]:
    """Canonical primitive integer form of a rational covector.

    Scales by the common denominator, divides by the gcd, and flips signs so
    the first nonzero entry is positive.  Two covectors define the same
    hyperplane iff they canonicalize identically.
    """
    fracs = [Fraction(x) for x in vector]
    if all(f == 0 for f in fracs):
        raise ValueError("zero covector does not define a hyperplane")
    denom_lcm = 1
    for f in fracs:
        d = f.denominator
        denom_lcm = denom_lcm * d // gcd(denom_lcm, d)
    ints = [int(f * denom_lcm) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    for x in ints:
        if x:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(ints)


def _reduce_primitive(vector: list[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries (0 stays 0)."""
    g = 0
    for x in vector:
        g = gcd(g, x)
    if g > 1:
        vector = [x // g for x in vector]
    return tuple(vector)


class IntEchelon:
    """Fraction-free integer row echelon; supports rank and membership tests.

    Rows are primitive integer vectors with strictly increasing pivot columns
    and positive pivots.  Reduction of v against a row r with pivot p at column
    c replaces v by p*v - v[c]*r, then strips the content, so all arithmetic
    stays in Z.
    """

    __slots__ = ("n", "rows", "pivots")

    def __init__(self, n: int):
        self.n = n
        self.rows: list[tuple[int, ...]] = []
        self.pivots: list[int] = []

    def copy(self) -> "IntEchelon":
        other = IntEchelon(self.n)
        other.rows = list(self.rows)
        other.pivots = list(self.pivots)
        return other

    @property
    def rank(self) -> int:
        return len(self.rows)

    def residue(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Reduce vector against the stored rows; zero iff in the row space."""
        v = list(vector)
        for r, c in zip(self.rows, self.pivots):
            vc = v[c]
            if vc:
                p = r[c]
                v = [p * a - vc * b for a, b in zip(v, r)]
        return _reduce_primitive(v)

    def contains(self, vector: Sequence[int]) -> bool:
        return not any(self.residue(vector))

    def add(self, vector: Sequence[int]) -> bool:
        """Adjoin a vector; returns True if it enlarged the span."""
        res = self.residue(vector)
        for c, x in enumerate(res):
            if x:
                if x < 0:
                    res = tuple(-y for y in res)
                pos = 0
                while pos < len(self.pivots) and self.pivots[pos] < c:
                    pos += 1
                self.rows.insert(pos, res)
                self.pivots.insert(pos, c)
                return True
        return False


def rank_of(vectors: Iterable[Sequence[int]], n: int) -> int:
    """Rank of a family of integer vectors in Z^n."""
    ech = IntEchelon(n)
    for v in vectors:
        ech.add(v)
    return ech.rank


def primitive_kernel_basis(rows: Sequence[Sequence[int]], n: int) -> list[tuple[int, ...]]:
    """Primitive integer basis of the null space {v : r . v = 0 for all rows}.

    Computed from the reduced row echelon form over Q, then cleared of
    denominators; each vector is primitive with first nonzero entry positive.
    Deterministic: one vector per free column, in column order.
    """
    rref = _rref([[Fraction(x) for x in row] for row in rows], n)
    pivots = [next(i for i, x in enumerate(row) if x) for row in rref]
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for row, p in zip(rref, pivots):
            v[p] = -row[free]
        basis.append(canonicalize(v))
    return basis


def _rref(rows: list[list[Fraction]], n: int) -> list[list[Fraction]]:
    """Reduced row echelon form over Q (unit pivots, zeros above and below)."""
    mat = [row[:] for row in rows]
    out: list[list[Fraction]] = []
    col = 0
    while mat and col < n:
        pivot_row = None
        for r in mat:
            if r[col]:
                pivot_row = r
                break
        if pivot_row is None:
            col += 1
            continue
        mat.remove(pivot_row)
        inv = pivot_row[col]
        pivot_row = [x / inv for x in pivot_row]
        for r in mat:
            if r[col]:
                f = r[col]
                for i in range(n):
                    r[i] -= f * pivot_row[i]
        for r in out:
            if r[col]:
                f = r[col]
                for i in range(n):
                    r[i] -= f * pivot_row[i]
        out.append(pivot_row)
        col += 1
    out.sort(key=lambda r: next(i for i, x in enumerate(r) if x))
    return out


class SubspaceBasis:
    """A linear subspace of Q^n in canonical reduced-row-echelon form.

    Two SubspaceBasis values compare equal iff they are the same subspace, so
    they are safe as dict keys.  `meet` is intersection, `sum_with` is subspace
    sum; both are exact.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[Sequence[Fraction]]):
        self.n = n
        self.rows: tuple[tuple[Fraction, ...], ...] = tuple(tuple(r) for r in rows)

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[int | Fraction]], n: int) -> "SubspaceBasis":
        rows = [[Fraction(x) for x in v] for v in vectors]
        return cls(n, _rref(rows, n))

    @classmethod
    def full(cls, n: int) -> "SubspaceBasis":
        eye = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
        return cls(n, eye)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains_vector(self, vector: Sequence[int | Fraction]) -> bool:
        v = [Fraction(x) for x in vector]
        for row in self.rows:
            p = next(i for i, x in enumerate(row) if x)
            if v[p]:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return not any(v)

    def contains_subspace(self, other: "SubspaceBasis") -> bool:
        return all(self.contains_vector(r) for r in other.rows)

    def kernel(self) -> "SubspaceBasis":
        """Annihilator {v : r . v = 0 for all basis rows} as a subspace."""
        vecs = primitive_kernel_basis([[int(x) for x in canonical_int_row(r)] for r in self.rows], self.n)
        return SubspaceBasis.from_vectors(vecs, self.n)

    def sum_with(self, other: "SubspaceBasis") -> "SubspaceBasis":
        return SubspaceBasis.from_vectors(list(self.rows) + list(other.rows), self.n)

    def meet(self, other: "SubspaceBasis") -> "SubspaceBasis":
        """Intersection, via the annihilator: U ∩ W = ann(ann U + ann W)."""
        return self.kernel().sum_with(other.kernel()).kernel()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SubspaceBasis) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"SubspaceBasis(n={self.n}, dim={self.dim})"


def canonical_int_row(row: Sequence[Fraction]) -> tuple[int, ...]:
    """Clear denominators of a rational row to a primitive integer vector."""
    denom_lcm = 1
    for f in row:
        d = Fraction(f).denominator
        denom_lcm = denom_lcm * d // gcd(denom_lcm, d)
    ints = [int(Fraction(f) * denom_lcm) for f in row]
    return _reduce_primitive(ints)
