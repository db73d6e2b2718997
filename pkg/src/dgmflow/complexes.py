"""Point clouds and Vietoris-Rips filtered complexes.

A filtered complex stores all simplices up to dimension 2 in a canonical
id order (vertices, then edges, then triangles, each lexicographic) together
with one filtration value per simplex.  The total filtration order sorts by
(value, dimension, lexicographic vertex tuple); because the id layout is
already (dimension, lex), a single stable argsort of the values realises it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInputError, StructuralError, UnsupportedDimensionError

MAX_DIM = 2


@dataclass
class PointCloud:
    """n points in R^d with stable integer labels 0..n-1."""

    coords: np.ndarray
    ids: np.ndarray = None

    def __post_init__(self):
        self.coords = np.atleast_2d(np.asarray(self.coords, dtype=np.float64))
        if self.coords.ndim != 2 or self.coords.shape[0] < 1:
            raise InvalidInputError("point cloud must be a non-empty n x d array")
        if not np.isfinite(self.coords).all():
            raise InvalidInputError("point cloud contains non-finite coordinates")
        n = self.coords.shape[0]
        if self.ids is None:
            self.ids = np.arange(n, dtype=np.int64)
        else:
            self.ids = np.asarray(self.ids, dtype=np.int64)
            if not np.array_equal(np.sort(self.ids), np.arange(n)):
                raise InvalidInputError("ids must be a permutation of 0..n-1")

    @property
    def n_points(self) -> int:
        return self.coords.shape[0]

    @property
    def dim(self) -> int:
        return self.coords.shape[1]

    def with_coords(self, coords: np.ndarray) -> "PointCloud":
        return PointCloud(coords, self.ids.copy())


def pairwise_distances(cloud: PointCloud) -> np.ndarray:
    """Symmetric matrix of Euclidean distances, zero diagonal."""
    x = cloud.coords
    sq = np.sum(x * x, axis=1)
    d2 = sq[:, None] + sq[None, :] - 2.0 * (x @ x.T)
    np.maximum(d2, 0.0, out=d2)
    d = np.sqrt(d2)
    np.fill_diagonal(d, 0.0)
    return 0.5 * (d + d.T)


class FilteredComplex:
    """Simplices up to dim 2 with filtration values and a deterministic order.

    Ids are laid out as vertices ``0..n-1``, edges ``n..n+E-1``, triangles
    ``n+E..n+E+T-1``; within each block rows are lexicographically sorted, so
    ascending id equals ascending (dimension, vertex tuple).
    """

    def __init__(self, n_vertices, edges, triangles, filtration, max_radius=np.inf):
        self.n_vertices = int(n_vertices)
        self.edges = np.asarray(edges, dtype=np.int32).reshape(-1, 2)
        self.triangles = np.asarray(triangles, dtype=np.int32).reshape(-1, 3)
        self.filtration = np.asarray(filtration, dtype=np.float64)
        self.max_radius = float(max_radius)
        if self.filtration.shape != (self.n_simplices,):
            raise InvalidInputError(
                f"filtration must have one value per simplex "
                f"({self.n_simplices}), got {self.filtration.shape}"
            )
        self._build_structure()
        self._check_monotone()
        # rank of each simplex in the total filtration order, and its inverse
        self.ranks, self.by_rank = _filtration_order(self.filtration)

    # -- structure shared across re-filtrations -------------------------------

    def _build_structure(self):
        n, E, T = self.n_vertices, len(self.edges), len(self.triangles)
        if self.edges.size and (self.edges[:, 0] >= self.edges[:, 1]).any():
            raise StructuralError("edge rows must be strictly increasing pairs")
        if self.triangles.size:
            tr = self.triangles
            if ((tr[:, 0] >= tr[:, 1]) | (tr[:, 1] >= tr[:, 2])).any():
                raise StructuralError("triangle rows must be strictly increasing")
        lookup = np.full((n, n), -1, dtype=np.int64)
        if E:
            lookup[self.edges[:, 0], self.edges[:, 1]] = n + np.arange(E)
        if T:
            i, j, k = self.triangles.T
            tri_edges = np.stack(
                [lookup[i, j], lookup[i, k], lookup[j, k]], axis=1
            )
            if (tri_edges < 0).any():
                raise StructuralError("triangle has a face missing from the complex")
            self.tri_edge_ids = tri_edges
        else:
            self.tri_edge_ids = np.empty((0, 3), dtype=np.int64)
        # static cofacet table: edge id -> triangle indices (0..T-1), sorted
        flat = np.repeat(np.arange(T, dtype=np.int64), 3)
        owner = (self.tri_edge_ids - n).ravel()
        order = np.argsort(owner, kind="stable")
        self.edge_cofacet_flat = flat[order]
        counts = np.bincount(owner, minlength=E) if T else np.zeros(E, dtype=np.int64)
        self.edge_cofacet_start = np.concatenate(([0], np.cumsum(counts)))

    def _check_monotone(self):
        n = self.n_vertices
        E, T = len(self.edges), len(self.triangles)
        f = self.filtration
        if E and (f[n : n + E] < np.maximum(f[self.edges[:, 0]], f[self.edges[:, 1]])).any():
            raise StructuralError("filtration not monotone: edge below a vertex")
        if T and (f[n + E :] < f[self.tri_edge_ids].max(axis=1)).any():
            raise StructuralError("filtration not monotone: triangle below a face")

    # -- basic queries ---------------------------------------------------------

    @property
    def n_simplices(self) -> int:
        return self.n_vertices + len(self.edges) + len(self.triangles)

    @property
    def order(self) -> np.ndarray:
        """Total order index per simplex (alias of ``ranks``)."""
        return self.ranks

    def dim_of(self, ids) -> np.ndarray:
        ids = np.asarray(ids)
        n, E = self.n_vertices, len(self.edges)
        return np.where(ids < n, 0, np.where(ids < n + E, 1, 2))

    def simplex_tuple(self, sid: int) -> tuple:
        n, E = self.n_vertices, len(self.edges)
        if sid < n:
            return (int(sid),)
        if sid < n + E:
            return tuple(int(v) for v in self.edges[sid - n])
        return tuple(int(v) for v in self.triangles[sid - n - E])

    @property
    def simplices(self) -> list:
        """All simplices as vertex tuples, in canonical id order."""
        out = [(i,) for i in range(self.n_vertices)]
        out += [tuple(int(v) for v in row) for row in self.edges]
        out += [tuple(int(v) for v in row) for row in self.triangles]
        return out

    def with_filtration(self, filtration: np.ndarray) -> "FilteredComplex":
        """Same simplex set with new values; order is re-sorted."""
        other = object.__new__(FilteredComplex)
        other.n_vertices = self.n_vertices
        other.edges = self.edges
        other.triangles = self.triangles
        other.max_radius = self.max_radius
        other.tri_edge_ids = self.tri_edge_ids
        other.edge_cofacet_flat = self.edge_cofacet_flat
        other.edge_cofacet_start = self.edge_cofacet_start
        other.filtration = np.asarray(filtration, dtype=np.float64)
        if other.filtration.shape != (self.n_simplices,):
            raise InvalidInputError("filtration length does not match simplex count")
        other._check_monotone()
        other.ranks, other.by_rank = _filtration_order(other.filtration)
        return other


def _filtration_order(filtration: np.ndarray):
    # stable sort keeps equal values in id order = (dimension, lex) order
    by_rank = np.argsort(filtration, kind="stable")
    ranks = np.empty_like(by_rank)
    ranks[by_rank] = np.arange(len(by_rank))
    return ranks, by_rank


def build_rips(cloud: PointCloud, max_dim: int = MAX_DIM, max_radius: float = None) -> FilteredComplex:
    """Vietoris-Rips complex: simplices whose diameter is at most max_radius.

    The filtration value of a simplex is its largest pairwise distance
    (0 for vertices).  ``max_radius=None`` defaults to 1.1 times the cloud
    diameter, keeping the complex connected at the end of the filtration.
    """
    if max_dim not in (1, 2):
        raise UnsupportedDimensionError(f"max_dim must be 1 or 2, got {max_dim}")
    D = pairwise_distances(cloud)
    n = cloud.n_points
    if max_radius is None:
        max_radius = 1.1 * D.max() if n > 1 else 1.0
    if not max_radius > 0:
        raise InvalidInputError("max_radius must be positive")

    iu, ju = np.triu_indices(n, k=1)
    keep = D[iu, ju] <= max_radius
    edges = np.stack([iu[keep], ju[keep]], axis=1).astype(np.int32)
    edge_f = D[edges[:, 0], edges[:, 1]] if len(edges) else np.empty(0)

    triangles = np.empty((0, 3), dtype=np.int32)
    tri_f = np.empty(0)
    if max_dim == 2 and n >= 3:
        adj = D <= max_radius
        np.fill_diagonal(adj, False)
        rows = []
        for i in range(n - 2):
            nb = np.nonzero(adj[i, i + 1 :])[0] + i + 1
            if len(nb) < 2:
                continue
            sub = adj[np.ix_(nb, nb)]
            jj, kk = np.nonzero(np.triu(sub, k=1))
            if len(jj):
                tri = np.empty((len(jj), 3), dtype=np.int32)
                tri[:, 0] = i
                tri[:, 1] = nb[jj]
                tri[:, 2] = nb[kk]
                rows.append(tri)
        if rows:
            triangles = np.concatenate(rows)
            tri_f = np.maximum(
                D[triangles[:, 0], triangles[:, 1]],
                np.maximum(
                    D[triangles[:, 0], triangles[:, 2]],
                    D[triangles[:, 1], triangles[:, 2]],
                ),
            )

    filtration = np.concatenate([np.zeros(n), edge_f, tri_f])
    cplx = FilteredComplex(n, edges, triangles, filtration, max_radius)
    # re-derive values from coordinate differences so that later re-evaluations
    # (rips_filtration_values) reproduce them bit-identically
    return rips_filtration_values(cloud, cplx)


def rips_filtration_values(cloud: PointCloud, cplx: FilteredComplex) -> FilteredComplex:
    """Re-evaluate Rips filtration values from current coordinates.

    The simplex set is unchanged; only values (and hence the order) move.
    """
    if cplx.n_vertices != cloud.n_points:
        raise InvalidInputError("complex and cloud disagree on point count")
    if not np.isfinite(cloud.coords).all():
        raise InvalidInputError("point cloud contains non-finite coordinates")
    n = cplx.n_vertices
    f = np.zeros(cplx.n_simplices)
    if len(cplx.edges):
        diff = cloud.coords[cplx.edges[:, 0]] - cloud.coords[cplx.edges[:, 1]]
        edge_f = np.sqrt(np.sum(diff * diff, axis=1))
        f[n : n + len(cplx.edges)] = edge_f
        if len(cplx.triangles):
            f[n + len(cplx.edges) :] = edge_f[cplx.tri_edge_ids - n].max(axis=1)
    return cplx.with_filtration(f)
