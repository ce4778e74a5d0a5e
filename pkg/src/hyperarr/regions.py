"""Regions (chambers) of central essential arrangements, exactly.

A region is a connected component of the complement, i.e. a maximal open cone
on which every defining form has constant sign; it is encoded by the bitmask
of forms that are positive on it.  For a central essential arrangement every
region is a pointed full-dimensional cone, and its extreme rays all span
one-dimensional flats of the intersection lattice.  Conversely, a candidate
ray (a signed primitive spanning vector of a one-dimensional flat) that
weakly satisfies every sign constraint of a region is an extreme ray of its
closure: the smallest face of the closure containing the candidate is the
intersection with the flat it spans, which is one-dimensional.

That gives an exact enumeration with no numeric feasibility solver.  A sign
vector, partial or full, admits a strictly feasible point if and only if the
candidate rays compatible with it have full rank: a generic positive
combination of a full-rank compatible set satisfies all assigned constraints
strictly.  The depth-first search over sign assignments therefore prunes on
"compatible rays have rank below the dimension" and visits exactly the
prefixes of genuine regions.

The rank generating function of the poset of regions based at B counts
regions by the number of hyperplanes separating them from B; it is compared
against the product of q-integers built from the exponents.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrangement import Arrangement, essentialize
from .exactlinalg import IntEchelon, primitive_kernel_basis
from .lattice import bit_indices, universe
from .polynomials import IntPoly, multiply, trim


@dataclass(frozen=True)
class Region:
    """One region: sign bitmask (bit i set = positive side of form i) and the
    primitive direction vectors of its extreme rays."""

    mask: int
    rays: tuple[tuple[int, ...], ...]

    @property
    def ray_count(self) -> int:
        return len(self.rays)


@dataclass(frozen=True)
class RegionSet:
    """All regions of (the essentialization of) an arrangement."""

    arrangement: Arrangement  # essential model; hyperplane order preserved
    regions: tuple[Region, ...]

    def __len__(self) -> int:
        return len(self.regions)

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(r.mask for r in self.regions)


def _candidate_rays(ess: Arrangement) -> list[tuple[int, ...]]:
    """Both signed primitive spanning vectors of every one-dimensional flat."""
    ell = ess.dim
    uni = universe(ess)
    out: list[tuple[int, ...]] = []
    if ell == 0:
        return out
    for f in uni.by_rank[ell - 1]:
        rows = [ess.covectors[h] for h in bit_indices(uni.bits[f])]
        (v,) = primitive_kernel_basis(rows, ell)
        out.append(v)
        out.append(tuple(-x for x in v))
    return out


def enumerate_regions(arr: Arrangement) -> RegionSet:
    """Enumerate all regions with their extreme rays.

    Works on the essentialization (same hyperplane indices, same region
    bitmasks); the ray vectors live in the essential coordinates.
    """
    ess = essentialize(arr) if not arr.is_essential else arr
    m = len(ess)
    ell = ess.dim
    if m == 0:
        return RegionSet(ess, (Region(0, ()),))
    cands = _candidate_rays(ess)
    nc = len(cands)
    full_alive = (1 << nc) - 1
    # per-hyperplane kill masks: branching positive kills the strictly
    # negative candidates and vice versa
    kill_if_plus = [0] * m
    kill_if_minus = [0] * m
    for k, v in enumerate(cands):
        for i, c in enumerate(ess.covectors):
            d = sum(ci * vi for ci, vi in zip(c, v))
            if d < 0:
                kill_if_plus[i] |= 1 << k
            elif d > 0:
                kill_if_minus[i] |= 1 << k

    def has_full_rank(alive: int) -> bool:
        ech = IntEchelon(ell)
        rest = alive
        while rest:
            low = rest & -rest
            ech.add(cands[low.bit_length() - 1])
            if ech.rank == ell:
                return True
            rest &= rest - 1
        return False

    if not has_full_rank(full_alive):
        raise ValueError("arrangement is not essential")

    found: list[tuple[int, int]] = []  # (sign mask, alive candidate mask)
    # depth-first over sign assignments; antipodal symmetry fixes the first
    # hyperplane positive and mirrors at the end
    stack = [(0, 0, full_alive & ~kill_if_plus[0])]
    if not has_full_rank(stack[0][2]):
        stack = []
    while stack:
        i, smask, alive = stack.pop()
        i += 1
        if i == m:
            found.append((smask | 1, alive))
            continue
        for bit, kill in ((1 << i, kill_if_plus[i]), (0, kill_if_minus[i])):
            child = alive & ~kill
            if child == alive or has_full_rank(child):
                stack.append((i, smask | bit, child))

    def mirror(mask: int) -> int:
        # candidates are paired (v at 2t, -v at 2t+1); swap each pair
        out = 0
        rest = mask
        while rest:
            low = rest & -rest
            out |= 1 << ((low.bit_length() - 1) ^ 1)
            rest &= rest - 1
        return out

    full_m = (1 << m) - 1
    regions: list[Region] = []
    for smask, alive in found:
        rays = tuple(cands[k] for k in bit_indices(alive))
        regions.append(Region(smask, rays))
        neg_rays = tuple(cands[k] for k in bit_indices(mirror(alive)))
        regions.append(Region(smask ^ full_m, neg_rays))
    regions.sort(key=lambda r: r.mask)
    return RegionSet(ess, tuple(regions))


def region_count(arr: Arrangement) -> int:
    """Number of regions, by evaluation of the characteristic polynomial."""
    from .lattice import zaslavsky_region_count

    return zaslavsky_region_count(arr)


def simplicial_defect(arr: Arrangement) -> int:
    """Total facet excess over all regions: zero exactly when every region is
    a simplicial cone.

    Each region of an essential rank-ell arrangement has at least ell facets,
    with equality for all regions exactly in the simplicial case; summing
    facets by the hyperplane they lie on counts each region of a restriction
    twice.
    """
    ess = essentialize(arr) if not arr.is_essential else arr
    ell = ess.dim
    m = len(ess)
    if m == 0:
        return 0
    uni = universe(ess)
    full = (1 << m) - 1
    b = uni.chi()
    total_regions = abs(sum(((-1) ** k) * c for k, c in enumerate(b)))
    walls = 0
    seen: set[int] = set()
    for h in range(m):
        f = uni.T[0][h]
        if f in seen:
            continue
        seen.add(f)
        chi_h = uni.node_chi(f, full)
        walls += abs(sum(((-1) ** k) * c for k, c in enumerate(chi_h)))
    defect = 2 * walls - ell * total_regions
    if defect < 0:
        raise AssertionError("facet count below the simplicial minimum")
    return defect


def is_simplicial(arr: Arrangement) -> bool:
    """Counting test: every region has the minimum number of facets."""
    return simplicial_defect(arr) == 0


def is_simplicial_geometric(regs: RegionSet) -> bool:
    """Geometric test: every region cone has exactly dim-many extreme rays."""
    ell = regs.arrangement.dim
    return all(r.ray_count == ell for r in regs.regions)


def separation(a: int, b: int) -> int:
    """Number of hyperplanes separating two regions given by sign masks."""
    return (a ^ b).bit_count()


def zeta_polynomial(regs: RegionSet, base_index: int) -> IntPoly:
    """Rank generating function of the poset of regions based at one region:
    coefficient of t^k counts regions separated from the base by k hyperplanes."""
    masks = regs.masks
    base = masks[base_index]
    coeffs = [0] * (len(regs.arrangement) + 1)
    for mk in masks:
        coeffs[(base ^ mk).bit_count()] += 1
    return trim(coeffs)


def q_integer_product(exponents: tuple[int, ...]) -> IntPoly:
    """prod over e of (1 + t + ... + t^e)."""
    acc: IntPoly = (1,)
    for e in exponents:
        acc = multiply(acc, tuple([1] * (e + 1)))
    return acc


def zeta_product_bases(regs: RegionSet, exponents: tuple[int, ...]) -> list[int]:
    """Indices of base regions whose rank generating function equals the
    product of q-integers of the exponents."""
    target = q_integer_product(exponents)
    masks = regs.masks
    mlen = len(regs.arrangement) + 1
    out: list[int] = []
    for bi, base in enumerate(masks):
        coeffs = [0] * mlen
        for mk in masks:
            coeffs[(base ^ mk).bit_count()] += 1
        if trim(coeffs) == target:
            out.append(bi)
    return out
