"""Persistence pairings and diagrams from filtered complexes.

The pairing is the unique one defined by left-to-right boundary-matrix
reduction of the filtration order.  Internally degree 0 uses the elder-rule
union-find sweep and degree 1 reduces the anti-transposed matrix; both are
provably equivalent to plain column reduction and are cross-checked against a
brute-force Betti-rank oracle in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._reduction import reduce_edge_cochains, union_find_pairs
from .complexes import FilteredComplex
from .errors import InvalidDegreeError

ZERO_PERSISTENCE_TOL = 1e-12


@dataclass
class PersistencePairing:
    """Persistence pairs as (birth, death) order indices, plus essentials."""

    pairs: np.ndarray  # (P, 2) int64, columns (birth rank, death rank)
    essential: np.ndarray  # (Q,) int64 ranks of unpaired simplices

    def __post_init__(self):
        self.pairs = np.asarray(self.pairs, dtype=np.int64).reshape(-1, 2)
        self.essential = np.asarray(self.essential, dtype=np.int64)


@dataclass
class PersistenceDiagram:
    """Finite (birth, death) points of one homology degree with provenance."""

    degree: int
    births: np.ndarray
    deaths: np.ndarray
    birth_ids: np.ndarray  # simplex ids in the originating complex
    death_ids: np.ndarray
    birth_simplices: list = field(default_factory=list)  # vertex tuples
    death_simplices: list = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.births)

    def as_points(self) -> np.ndarray:
        return np.stack([self.births, self.deaths], axis=1) if len(self) else np.empty((0, 2))

    @property
    def persistence(self) -> np.ndarray:
        return self.deaths - self.births


def reduce_boundary_matrix(cplx: FilteredComplex) -> PersistencePairing:
    """Compute the persistence pairing of the filtration."""
    n, E, T = cplx.n_vertices, len(cplx.edges), len(cplx.triangles)
    ranks = cplx.ranks
    pair_rows = []

    negative = np.zeros(E, dtype=bool)
    if E:
        edge_ranks = ranks[n : n + E]
        edge_pos = np.argsort(edge_ranks, kind="stable")
        b_vert, d_edge, negative = union_find_pairs(
            cplx.edges[:, 0].astype(np.int64),
            cplx.edges[:, 1].astype(np.int64),
            edge_pos,
            n,
        )
        if len(b_vert):
            pair_rows.append(np.stack([ranks[b_vert], edge_ranks[d_edge]], axis=1))

    if T:
        positive = np.nonzero(~negative)[0]
        proc = positive[np.argsort(-edge_ranks[positive], kind="stable")]
        tri_ranks = ranks[n + E :]
        e_idx, low_rank, _ = reduce_edge_cochains(
            proc,
            cplx.edge_cofacet_start,
            cplx.edge_cofacet_flat,
            tri_ranks,
            cplx.n_simplices,
        )
        if len(e_idx):
            pair_rows.append(np.stack([edge_ranks[e_idx], low_rank], axis=1))

    if pair_rows:
        pairs = np.concatenate(pair_rows)
        pairs = pairs[np.argsort(pairs[:, 0], kind="stable")]
    else:
        pairs = np.empty((0, 2), dtype=np.int64)

    paired = np.zeros(cplx.n_simplices, dtype=bool)
    if len(pairs):
        paired[pairs.ravel()] = True
    essential = np.nonzero(~paired)[0]
    return PersistencePairing(pairs, essential)


def extract_diagram(
    pairing: PersistencePairing, cplx: FilteredComplex, p: int
) -> PersistenceDiagram:
    """Degree-p diagram: filtration values of pairs whose birth has dim p.

    Zero-persistence points (death - birth <= 1e-12) and essential classes
    are dropped.
    """
    if p not in (0, 1):
        raise InvalidDegreeError(f"degree must be 0 or 1, got {p}")
    pairs = pairing.pairs
    if len(pairs) == 0:
        return PersistenceDiagram(p, np.empty(0), np.empty(0),
                                  np.empty(0, np.int64), np.empty(0, np.int64))
    birth_ids = cplx.by_rank[pairs[:, 0]]
    death_ids = cplx.by_rank[pairs[:, 1]]
    sel = cplx.dim_of(birth_ids) == p
    birth_ids, death_ids = birth_ids[sel], death_ids[sel]
    births = cplx.filtration[birth_ids]
    deaths = cplx.filtration[death_ids]
    keep = deaths - births > ZERO_PERSISTENCE_TOL
    birth_ids, death_ids = birth_ids[keep], death_ids[keep]
    births, deaths = births[keep], deaths[keep]
    order = np.lexsort((birth_ids, deaths, births))
    birth_ids, death_ids = birth_ids[order], death_ids[order]
    births, deaths = births[order], deaths[order]
    return PersistenceDiagram(
        p,
        births,
        deaths,
        birth_ids,
        death_ids,
        [cplx.simplex_tuple(s) for s in birth_ids],
        [cplx.simplex_tuple(s) for s in death_ids],
    )


def diagram(cloud_or_complex, p: int, max_radius: float = None) -> PersistenceDiagram:
    """Convenience: Rips complex (if needed), reduction, extraction."""
    from .complexes import PointCloud, build_rips

    if isinstance(cloud_or_complex, PointCloud):
        cplx = build_rips(cloud_or_complex, max_dim=min(p + 1, 2), max_radius=max_radius)
    else:
        cplx = cloud_or_complex
    return extract_diagram(reduce_boundary_matrix(cplx), cplx, p)
