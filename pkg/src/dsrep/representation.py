"""Canonical backbones, coupling coefficients, and full generator assembly.

A backbone is a multiset of Lorentz blocks plus an undirected edge set
naming which pairs carry non-zero displacement couplings.  Only two
families of connected backbones support a representation on their own:

    type A:  (A, A) + (A-1/2, A-1/2) + ... + (0, 0)
    type B:  (A, 0) + (A-1/2, 1/2) + ... + (0, A)

with N >= 2 blocks and A = (N-1)/2, consecutive blocks joined.  This
module constructs those chains, their coupling scalars, and assembles the
ten generator matrices for an arbitrary backbone with given couplings.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .blocks import BlockLabel, hla_cartesian
from .coupling import cartesian_from_ladders, compatibility, t_sign_relation, u_blocks
from .numeric import HalfInt

__all__ = [
    "Family",
    "Algebra",
    "CanonicalSpec",
    "BackboneGraph",
    "canonical_backbone",
    "canonical_dimension",
    "canonical_t",
    "canonical_t_squared",
    "first_ten_specs",
    "classify_canonical_chain",
    "GeneratorSet",
    "assemble",
    "assemble_canonical",
]


class Family(enum.Enum):
    TYPE_A = "a"
    TYPE_B = "b"


class Algebra(enum.Enum):
    DE_SITTER = "ds"
    ANTI_DE_SITTER = "ads"


@dataclass(frozen=True)
class CanonicalSpec:
    """One canonical chain: family plus block count N >= 2."""

    family: Family
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(
                f"a backbone needs at least two blocks, got N={self.n}"
            )


Edge = tuple[int, int]


def _normalize_edge(edge: Sequence[int], nblocks: int) -> Edge:
    i, j = int(edge[0]), int(edge[1])
    if i == j:
        raise ValueError(f"self-edge on block {i}")
    if not (0 <= i < nblocks and 0 <= j < nblocks):
        raise ValueError(f"edge ({i}, {j}) out of range for {nblocks} blocks")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class BackboneGraph:
    """Blocks (duplicates permitted) plus undirected index edges."""

    blocks: tuple[BlockLabel, ...]
    edges: frozenset[Edge] = field(default_factory=frozenset)

    @classmethod
    def make(cls, blocks: Iterable[BlockLabel], edges: Iterable[Sequence[int]]) -> "BackboneGraph":
        blocks = tuple(blocks)
        normalized = frozenset(_normalize_edge(e, len(blocks)) for e in edges)
        return cls(blocks, normalized)

    @property
    def nblocks(self) -> int:
        return len(self.blocks)

    @property
    def dim(self) -> int:
        return sum(b.dim for b in self.blocks)

    def neighbors(self, i: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return sorted(out)

    def label_multiplicities(self) -> dict[BlockLabel, int]:
        counts: dict[BlockLabel, int] = {}
        for b in self.blocks:
            counts[b] = counts.get(b, 0) + 1
        return counts

    def has_duplicates(self) -> bool:
        return any(c > 1 for c in self.label_multiplicities().values())

    def reversed(self) -> "BackboneGraph":
        n = self.nblocks
        remap = lambda i: n - 1 - i
        edges = frozenset(_normalize_edge((remap(a), remap(b)), n) for a, b in self.edges)
        return BackboneGraph(tuple(reversed(self.blocks)), edges)


# ---------------------------------------------------------------------------
# Canonical chains
# ---------------------------------------------------------------------------


def canonical_backbone(spec: CanonicalSpec) -> BackboneGraph:
    """The canonical chain for the given family and block count."""
    n = spec.n
    if spec.family is Family.TYPE_A:
        labels = [BlockLabel(HalfInt(k), HalfInt(k)) for k in range(n - 1, -1, -1)]
    else:
        labels = [BlockLabel(HalfInt(n - 1 - m), HalfInt(m)) for m in range(n)]
    edges = [(i, i + 1) for i in range(n - 1)]
    return BackboneGraph.make(labels, edges)


def canonical_dimension(spec: CanonicalSpec) -> int:
    """Closed-form total dimension of the canonical chain."""
    n = spec.n
    if spec.family is Family.TYPE_A:
        return n * (n + 1) * (2 * n + 1) // 6
    return n * (n + 1) * (n + 2) // 6


def canonical_t_squared(spec: CanonicalSpec, edge_index: int) -> Fraction:
    """Exact |t_{n,n+1}|^2 for edge n (1-based) of the canonical chain."""
    n_blocks = spec.n
    if not 1 <= edge_index <= n_blocks - 1:
        raise ValueError(f"edge index {edge_index} outside 1..{n_blocks - 1}")
    if spec.family is Family.TYPE_B:
        return Fraction(1, 4)
    n = edge_index
    nn = n_blocks
    return Fraction((2 * nn - n + 1) * n, 4 * (nn - n) * (nn - n + 1))


def canonical_t(spec: CanonicalSpec, edge_index: int) -> tuple[float, float]:
    """(t forward, t backward) for edge n of the canonical chain.

    Type B chains carry (1/2, 1/2) on every edge.  Type A chains carry
    (t, -t) with t the positive square root of `canonical_t_squared`;
    individual signs are a gauge choice, fixed here as forward-positive.
    """
    t_sq = canonical_t_squared(spec, edge_index)
    if spec.family is Family.TYPE_B:
        return 0.5, 0.5
    t = math.sqrt(float(t_sq))
    return t, -t


def first_ten_specs() -> list[tuple[int, CanonicalSpec]]:
    """The ten lowest-dimensional canonical chains, numbered by ascending dimension."""
    specs = [CanonicalSpec(fam, n) for n in range(2, 7) for fam in (Family.TYPE_A, Family.TYPE_B)]
    specs.sort(key=canonical_dimension)
    return [(ref + 1, spec) for ref, spec in enumerate(specs)]


def classify_canonical_chain(labels: Sequence[BlockLabel]) -> Optional[CanonicalSpec]:
    """Identify an (unordered) label sequence as one canonical chain, if it is one.

    The labels may be listed in either chain direction or any order; the
    test is against the canonical label multiset together with the
    requirement that consecutive sorted labels are chain neighbours.
    """
    n = len(labels)
    if n < 2:
        return None
    for family in (Family.TYPE_A, Family.TYPE_B):
        spec = CanonicalSpec(family, n)
        want = sorted(canonical_backbone(spec).blocks)
        if sorted(labels) == want:
            return spec
    return None


# ---------------------------------------------------------------------------
# Assembly
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorSet:
    """The ten assembled generator matrices plus their provenance.

    J and K are block-diagonal over the backbone; the four displacement
    generators have non-zero rectangles only on the backbone edges.  The
    coupling map t holds one scalar per ordered block pair on an edge.
    """

    backbone: BackboneGraph
    algebra: Algebra
    jx: np.ndarray
    jy: np.ndarray
    jz: np.ndarray
    kx: np.ndarray
    ky: np.ndarray
    kz: np.ndarray
    vt: np.ndarray
    vx: np.ndarray
    vy: np.ndarray
    vz: np.ndarray
    t: Mapping[tuple[int, int], float] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return self.jz.shape[0]

    def generators(self) -> dict[str, np.ndarray]:
        return {
            "Jx": self.jx, "Jy": self.jy, "Jz": self.jz,
            "Kx": self.kx, "Ky": self.ky, "Kz": self.kz,
            "Vt": self.vt, "Vx": self.vx, "Vy": self.vy, "Vz": self.vz,
        }

    def block_offsets(self) -> list[int]:
        offsets = [0]
        for b in self.backbone.blocks:
            offsets.append(offsets[-1] + b.dim)
        return offsets

    def block_slice(self, i: int) -> slice:
        offsets = self.block_offsets()
        return slice(offsets[i], offsets[i + 1])


def _as_pair_map(
    backbone: BackboneGraph,
    t: Mapping,
) -> dict[tuple[int, int], float]:
    """Normalise {edge: (t_ij, t_ji)} or {(i, j): value} input to ordered pairs."""
    out: dict[tuple[int, int], float] = {}
    for key, value in t.items():
        i, j = int(key[0]), int(key[1])
        if isinstance(value, (tuple, list)):
            forward, backward = float(value[0]), float(value[1])
            out[(i, j)] = forward
            out[(j, i)] = backward
        else:
            out[(i, j)] = float(value)
    for i, j in backbone.edges:
        if (i, j) not in out or (j, i) not in out:
            raise ValueError(f"missing coupling for edge ({i}, {j})")
    return out


def assemble(
    backbone: BackboneGraph,
    t: Mapping,
    algebra: Algebra = Algebra.DE_SITTER,
    validate_t: bool = True,
) -> GeneratorSet:
    """Build the ten generator matrices for a backbone with given couplings.

    t maps each edge (i, j) to the pair (t_ij, t_ji), or each ordered pair
    to its scalar.  With validate_t the Hermiticity sign rule between the
    two scalars of every edge is enforced (t_ij = -t_ji on ++/-- edges,
    t_ij = +t_ji on +-/-+ edges); disabling it permits deliberately broken
    inputs for testing.

    The anti-de Sitter algebra is produced from the de Sitter matrices by
    multiplying all four displacement generators by i.
    """
    tmap = _as_pair_map(backbone, t)
    offsets = [0]
    for b in backbone.blocks:
        offsets.append(offsets[-1] + b.dim)
    dim = offsets[-1]

    jx, jy, jz = (np.zeros((dim, dim), dtype=complex) for _ in range(3))
    kx, ky, kz = (np.zeros((dim, dim), dtype=complex) for _ in range(3))
    for i, label in enumerate(backbone.blocks):
        sl = slice(offsets[i], offsets[i + 1])
        bjx, bjy, bjz, bkx, bky, bkz = hla_cartesian(label)
        jx[sl, sl] = bjx
        jy[sl, sl] = bjy
        jz[sl, sl] = bjz
        kx[sl, sl] = bkx
        ky[sl, sl] = bky
        kz[sl, sl] = bkz

    vplus = np.zeros((dim, dim), dtype=complex)
    vminus = np.zeros((dim, dim), dtype=complex)
    wplus = np.zeros((dim, dim), dtype=complex)
    wminus = np.zeros((dim, dim), dtype=complex)
    for i, j in sorted(backbone.edges):
        p, q = backbone.blocks[i], backbone.blocks[j]
        case = compatibility(p, q)
        if case is None:
            raise ValueError(f"edge ({i}, {j}) joins incompatible blocks {p}, {q}")
        t_ij = tmap[(i, j)]
        t_ji = tmap[(j, i)]
        if validate_t:
            expected = t_sign_relation(case) * t_ij
            if not math.isclose(t_ji, expected, rel_tol=1e-12, abs_tol=1e-300):
                raise ValueError(
                    f"couplings on edge ({i}, {j}) violate the Hermiticity sign "
                    f"rule for case {case}: t_ji={t_ji}, expected {expected}"
                )
        u = u_blocks(p, q)
        sp = slice(offsets[i], offsets[i + 1])
        sq = slice(offsets[j], offsets[j + 1])
        vplus[sp, sq] = t_ij * u.uplus_pq
        vminus[sp, sq] = t_ij * u.uminus_pq
        wplus[sp, sq] = t_ij * u.wplus_pq
        wminus[sp, sq] = t_ij * u.wminus_pq
        vplus[sq, sp] = t_ji * u.uplus_qp
        vminus[sq, sp] = t_ji * u.uminus_qp
        wplus[sq, sp] = t_ji * u.wplus_qp
        wminus[sq, sp] = t_ji * u.wminus_qp

    vt, vx, vy, vz = cartesian_from_ladders(vplus, vminus, wplus, wminus)
    if algebra is Algebra.ANTI_DE_SITTER:
        vx, vy, vz, vt = 1j * vx, 1j * vy, 1j * vz, 1j * vt

    return GeneratorSet(
        backbone=backbone, algebra=algebra,
        jx=jx, jy=jy, jz=jz, kx=kx, ky=ky, kz=kz,
        vt=vt, vx=vx, vy=vy, vz=vz, t=dict(tmap),
    )


def assemble_canonical(
    spec: CanonicalSpec, algebra: Algebra = Algebra.DE_SITTER
) -> GeneratorSet:
    """Assemble one canonical chain with its canonical couplings."""
    backbone = canonical_backbone(spec)
    t = {
        (n - 1, n): canonical_t(spec, n)
        for n in range(1, spec.n)
    }
    return assemble(backbone, t, algebra)
