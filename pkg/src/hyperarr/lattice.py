"""Intersection lattices of central arrangements, exactly.

The engine builds the lattice rank by rank: a flat is identified by the bitset
of hyperplane indices containing it (the closed sets of the matroid of
normals), and a cover table T[f][h] = closure(f + h) is filled during the
build.  Two matroid facts make subarrangements and restrictions cheap on top
of one master lattice:

  * for B a subset of A and S closed in B, cl_B(S + h) = cl_A(S + h), so the
    lattice of any subarrangement is walked with the master's cover table;
  * the lattice of the restriction A^X is the interval above X.

Consequently the characteristic polynomial of any (restriction of a)
subarrangement is an interval Moebius computation over one shared structure,
keyed by (flat, hyperplane mask).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .arrangement import Arrangement, hyperplane_subspace, restrict_to_subspace
from .exactlinalg import IntEchelon, SubspaceBasis
from .polynomials import IntPoly, monic_linear_roots, trim


@dataclass(frozen=True)
class Flat:
    """A flat of the intersection lattice.

    contains: indices of the hyperplanes whose covector vanishes on the flat.
    rank: codimension of the flat; dim: its dimension as a subspace.
    """

    index: int
    rank: int
    contains: tuple[int, ...]
    dim: int
    mobius: int


class Universe:
    """Master lattice data for one arrangement (possibly built partially)."""

    def __init__(self, arr: Arrangement, up_to_rank: int | None = None):
        self.arr = arr
        self.m = len(arr)
        self.dim = arr.dim
        self.normals = list(arr.covectors)
        self.bits: list[int] = [0]
        self.rank: list[int] = [0]
        self._basis: list[IntEchelon] = [IntEchelon(self.dim)]
        self.T: list[list[int]] = [[-1] * self.m]
        self.parents: list[list[int]] = [[]]
        self.by_rank: list[list[int]] = [[0]]
        self.index_of_bits: dict[int, int] = {0: 0}
        self._full_mask = (1 << self.m) - 1
        self._node_chi: dict[tuple[int, int], IntPoly] = {}
        self._node_roots: dict[tuple[int, int], tuple[int, ...] | None] = {}
        self._rank_bits_memo: dict[int, int] = {0: 0}
        self.built_to = 0
        limit = arr.rank if up_to_rank is None else min(up_to_rank, arr.rank)
        self._build(limit)
        self.is_full = self.built_to >= arr.rank

    # -- construction ------------------------------------------------------

    def _build(self, limit: int) -> None:
        while self.built_to < limit:
            level = self.by_rank[self.built_to]
            nxt: list[int] = []
            for f in level:
                bf = self.bits[f]
                row = self.T[f]
                for h in range(self.m):
                    if row[h] != -1 or (bf >> h) & 1:
                        continue
                    ech = self._basis[f].copy()
                    ech.add(self.normals[h])
                    nb = bf
                    for j in range(self.m):
                        if not (nb >> j) & 1 and ech.contains(self.normals[j]):
                            nb |= 1 << j
                    g = self.index_of_bits.get(nb)
                    if g is None:
                        g = len(self.bits)
                        self.bits.append(nb)
                        self.rank.append(self.built_to + 1)
                        self._basis.append(ech)
                        self.T.append([-1] * self.m)
                        self.parents.append([])
                        self.index_of_bits[nb] = g
                        nxt.append(g)
                    self.parents[g].append(f)
                    new_hs = nb & ~bf
                    while new_hs:
                        low = new_hs & -new_hs
                        row[low.bit_length() - 1] = g
                        new_hs &= new_hs - 1
            self.by_rank.append(nxt)
            self.built_to += 1
        if not self.by_rank[-1]:
            self.by_rank.pop()

    # -- basic queries -----------------------------------------------------

    def flat_count(self) -> int:
        return len(self.bits)

    def rank_of_bits(self, mask: int) -> int:
        memo = self._rank_bits_memo
        r = memo.get(mask)
        if r is None:
            ech = IntEchelon(self.dim)
            rest = mask
            while rest:
                low = rest & -rest
                ech.add(self.normals[low.bit_length() - 1])
                rest &= rest - 1
            r = ech.rank
            memo[mask] = r
        return r

    def flat_subspace(self, f: int) -> SubspaceBasis:
        """The flat as a subspace (intersection of its hyperplanes)."""
        rows = [self.normals[h] for h in bit_indices(self.bits[f])]
        if not rows:
            return SubspaceBasis.full(self.dim)
        return SubspaceBasis.from_vectors(rows, self.dim).kernel()

    # -- interval / submask engine ------------------------------------------

    def node_key(self, x: int, mask: int) -> tuple[int, int]:
        return (x, mask & self._full_mask & ~self.bits[x])

    def node_walk(self, x: int, mask: int) -> tuple[list[int], list[list[int]], list[int]]:
        """Flats of the interval above x in the subarrangement given by mask.

        Returns (master flat ids in rank order, local parent lists, local
        relative ranks).  Requires a fully built lattice.
        """
        if not self.is_full:
            raise RuntimeError("interval walk requires a fully built lattice")
        mask &= ~self.bits[x]
        order = [x]
        local = {x: 0}
        parents: list[list[int]] = [[]]
        ranks = [0]
        frontier = [x]
        rel = 0
        while frontier:
            rel += 1
            nxt: list[int] = []
            for f in frontier:
                fl = local[f]
                row = self.T[f]
                hs = mask & ~self.bits[f]
                seen_children: set[int] = set()
                while hs:
                    low = hs & -hs
                    hs &= hs - 1
                    g = row[low.bit_length() - 1]
                    if g in seen_children:
                        continue
                    seen_children.add(g)
                    gl = local.get(g)
                    if gl is None:
                        gl = len(order)
                        local[g] = gl
                        order.append(g)
                        parents.append([])
                        ranks.append(rel)
                        nxt.append(g)
                    parents[gl].append(fl)
            frontier = nxt
        return order, parents, ranks

    def node_mobius(self, x: int, mask: int) -> tuple[list[int], list[int]]:
        """(master flat ids, Moebius values) for the interval/submask node."""
        order, parents, _ = self.node_walk(x, mask)
        n = len(order)
        down = [0] * n
        mob = [0] * n
        for i in range(n):
            d = 0
            for p in parents[i]:
                d |= down[p] | (1 << p)
            down[i] = d
            if i == 0:
                mob[0] = 1
                continue
            acc = 0
            while d:
                low = d & -d
                acc += mob[low.bit_length() - 1]
                d &= d - 1
            mob[i] = -acc
        return order, mob

    def node_chi(self, x: int, mask: int) -> IntPoly:
        """Characteristic polynomial of the node (ambient = the flat x)."""
        key = self.node_key(x, mask)
        chi = self._node_chi.get(key)
        if chi is None:
            order, mob = self.node_mobius(key[0], key[1])
            deg = self.dim - self.rank[x]
            coeffs = [0] * (deg + 1)
            for f, mu in zip(order, mob):
                coeffs[self.dim - self.rank[f]] += mu
            chi = trim(coeffs)
            self._node_chi[key] = chi
        return chi

    def node_roots(self, x: int, mask: int) -> tuple[int, ...] | None:
        key = self.node_key(x, mask)
        if key not in self._node_roots:
            self._node_roots[key] = monic_linear_roots(self.node_chi(x, mask))
        return self._node_roots[key]

    def node_elements(self, x: int, mask: int) -> list[tuple[int, int]]:
        """Hyperplanes of the node: (flat id one rank above x, preimage mask)."""
        mask &= ~self.bits[x]
        row = self.T[x]
        groups: dict[int, int] = {}
        hs = mask
        while hs:
            low = hs & -hs
            hs &= hs - 1
            g = row[low.bit_length() - 1]
            groups[g] = groups.get(g, 0) | low
        return sorted(groups.items())

    def chi(self, mask: int | None = None) -> IntPoly:
        return self.node_chi(0, self._full_mask if mask is None else mask)


def bit_indices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask &= mask - 1
    return tuple(out)


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


_universe_cache: dict[Arrangement, Universe] = {}


def universe(arr: Arrangement, up_to_rank: int | None = None) -> Universe:
    """Shared lattice engine per arrangement; upgrades partial builds on demand."""
    uni = _universe_cache.get(arr)
    need_full = up_to_rank is None or up_to_rank >= arr.rank
    if uni is not None and (uni.is_full or (not need_full and uni.built_to >= up_to_rank)):
        return uni
    uni = Universe(arr, up_to_rank)
    keep = _universe_cache.get(arr)
    if keep is None or uni.built_to > keep.built_to:
        _universe_cache[arr] = uni
    return uni


class IntersectionLattice:
    """Public view of the intersection lattice of one arrangement."""

    def __init__(self, arr: Arrangement, up_to_rank: int | None = None):
        self.arrangement = arr
        self._uni = universe(arr, up_to_rank)
        self._flats: list[Flat] | None = None

    @property
    def is_full(self) -> bool:
        return self._uni.is_full

    def flats(self) -> list[Flat]:
        if self._flats is None:
            uni = self._uni
            if uni.is_full:
                order, mob = uni.node_mobius(0, uni._full_mask)
                mob_by_id = dict(zip(order, mob))
            else:
                mob_by_id = {}
            self._flats = [
                Flat(
                    index=f,
                    rank=uni.rank[f],
                    contains=bit_indices(uni.bits[f]),
                    dim=uni.dim - uni.rank[f],
                    mobius=mob_by_id.get(f, 0),
                )
                for f in range(uni.flat_count())
            ]
        return self._flats

    def flat_by_contains(self, indices: Iterable[int]) -> Flat:
        mask = mask_of(indices)
        f = self._uni.index_of_bits.get(mask)
        if f is None:
            raise KeyError(f"no flat with contains set {sorted(bit_indices(mask))}")
        return self.flats()[f]

    def counts_by_rank(self) -> list[int]:
        return [len(level) for level in self._uni.by_rank]

    def chi(self) -> IntPoly:
        return self._uni.chi()

    def poincare(self) -> IntPoly:
        """pi(A,t) = sum mu(X) (-t)^{r(X)} over all flats."""
        order, mob = self._uni.node_mobius(0, self._uni._full_mask)
        coeffs = [0] * (self.arrangement.rank + 1)
        for f, mu in zip(order, mob):
            r = self._uni.rank[f]
            coeffs[r] += mu * (-1) ** r
        return trim(coeffs)

    def to_json_dict(self) -> dict:
        flats = sorted(self.flats(), key=lambda fl: (fl.rank, fl.contains))
        return {
            "schema": "hyperarr/lattice-v1",
            "dim": self.arrangement.dim,
            "covectors": [list(c) for c in self.arrangement.covectors],
            "full": self.is_full,
            "flats": [
                {
                    "rank": fl.rank,
                    "contains": list(fl.contains),
                    "mobius": fl.mobius,
                    "dim": fl.dim,
                }
                for fl in flats
            ],
        }


def build_lattice(arr: Arrangement, up_to_rank: int | None = None) -> IntersectionLattice:
    return IntersectionLattice(arr, up_to_rank)


def chi(arr: Arrangement) -> IntPoly:
    """Characteristic polynomial via Moebius values of the full lattice."""
    return universe(arr).chi()


def zaslavsky_region_count(arr: Arrangement) -> int:
    """Number of chambers of a real central arrangement: (-1)^dim chi(-1)."""
    from .polynomials import evaluate

    return (-1) ** arr.dim * evaluate(chi(arr), -1)


def localization(arr: Arrangement, flat: Flat) -> Arrangement:
    """The subarrangement of hyperplanes containing the flat (ambient kept)."""
    return arr.subset(flat.contains)


def restriction(arr: Arrangement, flat: Flat) -> Arrangement:
    """The restriction of arr to the flat, in canonical RREF coordinates."""
    uni = universe(arr, up_to_rank=flat.rank)
    f = uni.index_of_bits[mask_of(flat.contains)]
    return restrict_to_subspace(arr, uni.flat_subspace(f))


# -- modularity and supersolvability --------------------------------------


def modular_flat_indices(arr: Arrangement) -> list[int]:
    """Indices of flats X with r(X) + r(Y) = r(X v Y) + r(X ^ Y) for all Y.

    Equivalent to the subspace condition that X + Y is again a flat for every
    flat Y.  Always contains the ambient space, all hyperplanes, and the
    center.  Intended for modest lattices; supersolvability uses a lazy search
    instead.
    """
    uni = universe(arr)
    return [f for f in range(uni.flat_count()) if _is_modular(uni, f)]


def _is_modular(uni: Universe, x: int) -> bool:
    bx = uni.bits[x]
    rx = uni.rank[x]
    flats = range(uni.flat_count())
    # same-rank flats violate most often; scan them first
    ordered = sorted(flats, key=lambda y: (uni.rank[y] != rx, uni.rank[y]))
    for y in ordered:
        by = uni.bits[y]
        meet = uni.index_of_bits.get(bx & by)
        if meet is None:  # closed sets are intersection-closed; must exist
            raise AssertionError("flat intersection missing from lattice")
        if rx + uni.rank[y] != uni.rank_of_bits(bx | by) + uni.rank[meet]:
            return False
    return True


def is_supersolvable(arr: Arrangement) -> tuple[bool, list[tuple[int, ...]] | None]:
    """Decide supersolvability; on success, return a maximal modular chain.

    The chain is reported as contains-index sets from the ambient space up to
    the center.  Rank <= 2 arrangements are always supersolvable.  Non-
    essential input is essentialized first (same lattice, same index sets).
    """
    from .arrangement import essentialize

    ess = essentialize(arr)
    uni = universe(ess)
    r = ess.rank
    modular_memo: dict[int, bool] = {}

    def modular(f: int) -> bool:
        v = modular_memo.get(f)
        if v is None:
            v = _is_modular(uni, f)
            modular_memo[f] = v
        return v

    chain: list[int] = [0]

    def extend(x: int, k: int) -> bool:
        if k == r:
            return True
        bx = uni.bits[x]
        for g in uni.by_rank[k + 1]:
            if uni.bits[g] & bx == bx and modular(g):
                chain.append(g)
                if extend(g, k + 1):
                    return True
                chain.pop()
        return False

    ok = extend(0, 0)
    if not ok:
        return False, None
    return True, [bit_indices(uni.bits[f]) for f in chain]


def find_generic_rank3_localization(arr: Arrangement) -> Flat | None:
    """A rank-3 flat whose localization is generic with >= 4 hyperplanes.

    Such a localization certifies that the arrangement is not free and not
    aspherical.  Only ranks <= 3 of the lattice are built.  Returns the first
    flat in deterministic order, or None.
    """
    if arr.rank < 3:
        return None
    uni = universe(arr, up_to_rank=3)
    lat_levels = uni.by_rank
    if len(lat_levels) < 4:
        return None
    for f in lat_levels[3]:
        members = bit_indices(uni.bits[f])
        k = len(members)
        if k < 4:
            continue
        if _localization_is_generic_rank3(uni, members):
            loc = universe(uni.arr.subset(members))
            order, mob_vals = loc.node_mobius(0, (1 << len(members)) - 1)
            top = max(range(len(order)), key=lambda i: loc.rank[order[i]])
            mob = mob_vals[top]
            return Flat(index=f, rank=3, contains=members, dim=uni.dim - 3, mobius=mob)
    return None


def _localization_is_generic_rank3(uni: Universe, members: Sequence[int]) -> bool:
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            ech = IntEchelon(uni.dim)
            ech.add(uni.normals[members[a]])
            ech.add(uni.normals[members[b]])
            for c in members:
                if c != members[a] and c != members[b] and ech.contains(uni.normals[c]):
                    return False
    return True
