"""Central rational hyperplane arrangements and the hyperpolygonal family.

An arrangement is an immutable ordered tuple of distinct canonical integer
covectors in Q^dim; hyperplane i is the kernel of covector i.  The
hyperpolygonal arrangement of order n lives in Q^n and consists of the n
coordinate hyperplanes together with one hyperplane ker(sum_{i in I} x_i -
sum_{j not in I} x_j) for each class {I, [n] \\ I} of nonempty proper-or-full
subsets, so it has n + 2^(n-1) hyperplanes for n >= 2.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactlinalg import (
    IntEchelon,
    SubspaceBasis,
    canonicalize,
    primitive_kernel_basis,
    rank_of,
)

Covector = tuple[int, ...]


class ParseError(ValueError):
    """Malformed arrangement text input."""


@dataclass(frozen=True)
class Arrangement:
    """An ordered central arrangement given by canonical integer covectors."""

    dim: int
    covectors: tuple[Covector, ...]

    def __post_init__(self):
        seen = set()
        for c in self.covectors:
            if len(c) != self.dim:
                raise ValueError(f"covector {c} has length {len(c)}, expected {self.dim}")
            if c != canonicalize(c):
                raise ValueError(f"covector {c} is not canonical")
            if c in seen:
                raise ValueError(f"duplicate hyperplane {c}")
            seen.add(c)

    def __len__(self) -> int:
        return len(self.covectors)

    def __iter__(self):
        return iter(self.covectors)

    @property
    def rank(self) -> int:
        return rank_of(self.covectors, self.dim)

    @property
    def is_essential(self) -> bool:
        return self.rank == self.dim

    def index_of(self, covector: Sequence[int]) -> int:
        return self.covectors.index(canonicalize(covector))

    def subset(self, indices: Iterable[int]) -> "Arrangement":
        """Subarrangement keeping the original relative order and ambient space."""
        idx = sorted(set(indices))
        return Arrangement(self.dim, tuple(self.covectors[i] for i in idx))

    def with_hyperplane(self, covector: Sequence[int]) -> "Arrangement":
        """Arrangement extended by one new hyperplane (appended last)."""
        c = canonicalize(covector)
        if c in self.covectors:
            raise ValueError(f"hyperplane {c} already present")
        return Arrangement(self.dim, self.covectors + (c,))

    def delete(self, index: int) -> "Arrangement":
        return Arrangement(
            self.dim, self.covectors[:index] + self.covectors[index + 1 :]
        )


def from_vectors(dim: int, vectors: Iterable[Sequence[int | Fraction]]) -> Arrangement:
    """Build an arrangement from raw covectors; raises on duplicates."""
    return Arrangement(dim, tuple(canonicalize(v) for v in vectors))


def hyperpolygonal(n: int) -> Arrangement:
    """The hyperpolygonal arrangement of order n in Q^n.

    Ordering is deterministic: coordinate hyperplanes x_1..x_n first, then the
    subset-defined hyperplanes indexed by the class representative I not
    containing n, sorted by (|I|, lexicographic).  I = {} represents the class
    of the full set [n], i.e. ker(x_1 + ... + x_n).
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    covs: list[Covector] = []
    for i in range(n):
        covs.append(canonicalize([1 if j == i else 0 for j in range(n)]))
    reps: list[tuple[int, ...]] = []
    for size in range(n):
        reps.extend(itertools.combinations(range(n - 1), size))
    for rep in reps:
        vec = [1 if i in rep else -1 for i in range(n)]
        c = canonicalize(vec)
        if c not in covs:
            covs.append(c)
    return Arrangement(n, tuple(covs))


def boolean(n: int) -> Arrangement:
    """The coordinate (Boolean) arrangement in Q^n."""
    return from_vectors(n, ([1 if j == i else 0 for j in range(n)] for i in range(n)))


def hyperplane_subspace(covector: Sequence[int], dim: int) -> SubspaceBasis:
    """The hyperplane ker(covector) as a subspace of Q^dim."""
    return SubspaceBasis.from_vectors(primitive_kernel_basis([list(covector)], dim), dim)


def restrict_to_subspace(arr: Arrangement, subspace: SubspaceBasis) -> Arrangement:
    """Restriction of the arrangement to a subspace X.

    Coordinates on X are the canonical reduced-row-echelon basis rows of X, so
    the output is deterministic.  Hyperplanes containing X disappear; the rest
    restrict to hyperplanes of X, merged when their traces coincide, keeping
    first-seen order.
    """
    if subspace.dim == 0:
        raise ValueError("restriction to the origin is not an arrangement")
    rows = subspace.rows
    out: list[Covector] = []
    for c in arr.covectors:
        local = [sum(Fraction(ci) * ri for ci, ri in zip(c, row)) for row in rows]
        if all(x == 0 for x in local):
            continue  # hyperplane contains X
        lc = canonicalize(local)
        if lc not in out:
            out.append(lc)
    return Arrangement(subspace.dim, tuple(out))


def restriction_to_hyperplane(arr: Arrangement, index: int) -> Arrangement:
    """The restriction of arr to its index-th hyperplane."""
    return restrict_to_subspace(arr, hyperplane_subspace(arr.covectors[index], arr.dim))


def triple(arr: Arrangement, index: int) -> tuple[Arrangement, Arrangement, Arrangement]:
    """(arrangement, deletion, restriction) with respect to hyperplane index."""
    return arr, arr.delete(index), restriction_to_hyperplane(arr, index)


def essentialize(arr: Arrangement) -> Arrangement:
    """Image of the arrangement in the quotient by its center.

    Covectors are rewritten in coordinates with respect to the canonical RREF
    basis of their span; the intersection lattice is unchanged.  Essential
    arrangements are returned unchanged.
    """
    r = arr.rank
    if r == arr.dim:
        return arr
    span = SubspaceBasis.from_vectors(arr.covectors, arr.dim)
    pivots = [next(i for i, x in enumerate(row) if x) for row in span.rows]
    covs = [canonicalize([c[p] for p in pivots]) for c in arr.covectors]
    return Arrangement(r, tuple(covs))


def is_generic(arr: Arrangement, subset_cap: int = 10**6) -> bool:
    """True iff |A| > r(A) and every r(A)-subset of covectors has rank r(A).

    Genericity is measured against the rank, not the ambient dimension, so a
    non-essential arrangement is generic exactly when its essentialization is.
    A quick uniformity pre-check (no overfull low-rank flat through a pair)
    avoids subset enumeration in most negative cases; enumeration beyond
    subset_cap raises rather than guessing.
    """
    m = len(arr)
    r = arr.rank
    if m <= r:
        return False
    if r >= 3:
        # any pair whose span captures a third covector breaks uniformity
        for i in range(m):
            for j in range(i + 1, m):
                ech = IntEchelon(arr.dim)
                ech.add(arr.covectors[i])
                ech.add(arr.covectors[j])
                for k in range(m):
                    if k != i and k != j and ech.contains(arr.covectors[k]):
                        return False
    if math.comb(m, r) > subset_cap:
        raise RuntimeError(
            f"genericity check needs {math.comb(m, r)} subset ranks (cap {subset_cap})"
        )
    for sub in itertools.combinations(arr.covectors, r):
        if rank_of(sub, arr.dim) != r:
            return False
    return True


def verify_linear_isomorphism(
    source: Arrangement, target: Arrangement, matrix: Sequence[Sequence[int | Fraction]]
) -> bool:
    """Check that a substitution x_i -> row_i(matrix) maps source onto target.

    matrix row i gives the image of the coordinate form x_i, so a covector c
    maps to c . matrix.  True iff the matrix is invertible and the induced map
    on canonical covectors is a bijection from source's hyperplanes onto
    target's.
    """
    rows = [[Fraction(x) for x in row] for row in matrix]
    if source.dim != target.dim:
        raise ValueError(f"dimension mismatch: {source.dim} vs {target.dim}")
    if len(rows) != source.dim or any(len(r) != target.dim for r in rows):
        raise ValueError("matrix shape does not match the ambient dimension")
    int_rows = []
    for row in rows:
        denom = 1
        for f in row:
            denom = denom * f.denominator // math.gcd(denom, f.denominator)
        int_rows.append([int(f * denom) for f in row])
    if rank_of(int_rows, target.dim) != target.dim:
        raise ValueError("matrix is singular")
    if len(source) != len(target):
        return False
    images = set()
    for c in source.covectors:
        img = [sum(Fraction(ci) * rows[i][j] for i, ci in enumerate(c)) for j in range(target.dim)]
        images.add(canonicalize(img))
    return images == set(target.covectors)


def parse_arrangement_text(text: str) -> Arrangement:
    """Parse the plain text format: first line `dim L`, then one covector per line.

    `#` starts a comment; blank lines are skipped.  Covectors are canonicalized;
    duplicates are dropped with a warning.
    """
    lines: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((lineno, stripped))
    if not lines:
        raise ParseError("empty input")
    head_no, head_text = lines[0]
    head = head_text.split()
    if len(head) != 2 or head[0] != "dim":
        raise ParseError(f"line {head_no}: first line must be 'dim L', got {head_text!r}")
    try:
        dim = int(head[1])
    except ValueError as exc:
        raise ParseError(f"line {head_no}: bad dimension {head[1]!r}") from exc
    if dim < 1:
        raise ParseError(f"line {head_no}: dimension must be >= 1")
    covs: list[Covector] = []
    for lineno, ln in lines[1:]:
        toks = ln.split()
        if len(toks) != dim:
            raise ParseError(f"line {lineno}: expected {dim} entries, got {len(toks)}: {ln!r}")
        try:
            vec = [int(t) for t in toks]
        except ValueError as exc:
            raise ParseError(f"line {lineno}: non-integer entry in {ln!r}") from exc
        if all(x == 0 for x in vec):
            raise ParseError(f"line {lineno}: zero covector: {ln!r}")
        c = canonicalize(vec)
        if c in covs:
            warnings.warn(f"line {lineno}: duplicate hyperplane {c} dropped", stacklevel=2)
            continue
        covs.append(c)
    return Arrangement(dim, tuple(covs))


def format_arrangement_text(arr: Arrangement) -> str:
    lines = [f"dim {arr.dim}"]
    lines.extend(" ".join(str(x) for x in c) for c in arr.covectors)
    return "\n".join(lines) + "\n"
