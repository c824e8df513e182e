"""Graph boundary computation.

Two notions are computed for a finite simple connected graph:

* the averaged boundary: u is a boundary vertex if some vertex v makes the
  average distance of u's neighbors to v strictly smaller than d(u, v);
* the Chartrand-Erwin-Johns-Zhang (CEJZ) boundary: u qualifies if some v
  makes every neighbor of u no farther from v than u is.

The averaged criterion is evaluated in exact integers: u is in the slice of
v iff  sum_{w ~ u} d(w, v)  <  deg(u) * d(u, v).  Multiplying through by
deg(u) removes the fraction, so there are no floating-point ties anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DistanceField, Graph, bfs_distances, parallel_map


@dataclass(frozen=True)
class BoundarySlice:
    """Boundary members identified from a single source vertex.

    ``witnesses`` maps each member u to the integer pair (S, D) with
    S = sum of neighbor distances to the source and D = deg(u) * d(u, source);
    membership means S < D strictly. The source never certifies itself:
    d(v, v) = 0 forces D = 0 while S >= 0.
    """

    source: int
    members: frozenset[int]
    witnesses: dict[int, tuple[int, int]]


@dataclass(frozen=True)
class BoundaryReport:
    """Full boundary description of one connected graph.

    ``witness`` maps each boundary member to the smallest source id that
    certifies it, for reproducibility. ``slices`` is indexed by source id.
    """

    n: int
    m: int
    max_degree: int
    diameter: int
    boundary: tuple[int, ...]
    cejz_boundary: tuple[int, ...]
    witness: dict[int, int]
    slices: tuple[BoundarySlice, ...] | None = None


def boundary_slice(g: Graph, df: DistanceField) -> BoundarySlice:
    """Members u with  sum_{w ~ u} d(w, v) < deg(u) * d(u, v)  for v = source."""
    dist = df.dist
    members = []
    witnesses = {}
    for u, nbrs in enumerate(g.adjacency):
        s = 0
        for w in nbrs:
            s += dist[w]
        d = len(nbrs) * dist[u]
        if s < d:
            members.append(u)
            witnesses[u] = (s, d)
    return BoundarySlice(source=df.source, members=frozenset(members), witnesses=witnesses)


def laplacian_matrix(g: Graph) -> np.ndarray:
    """L = D - A as an int64 matrix (degree matrix minus adjacency matrix)."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, nbrs in enumerate(g.adjacency):
        for w in nbrs:
            a[u, w] = 1
    return np.diag(a.sum(axis=1)) - a


def laplacian_slice(g: Graph, df: DistanceField, lap: np.ndarray | None = None) -> frozenset[int]:
    """{u : (L f_v)(u) > 0} computed literally through the matrix route.

    Cross-check oracle for :func:`boundary_slice`: the two must agree on
    every input, since (L f_v)(u) = deg(u) d(u, v) - sum_{w ~ u} d(w, v).
    Pass a precomputed ``lap`` when checking many sources on one graph.
    """
    if lap is None:
        lap = laplacian_matrix(g)
    f = np.asarray(df.dist, dtype=np.int64)
    return frozenset(int(u) for u in np.nonzero(lap @ f > 0)[0])


def cejz_slice(g: Graph, df: DistanceField) -> frozenset[int]:
    """Vertices whose neighbors are all no farther from the source than they are.

    Degree-0 vertices are excluded rather than admitted vacuously; this only
    matters for K_1, whose boundary is defined empty.
    """
    dist = df.dist
    out = []
    for u, nbrs in enumerate(g.adjacency):
        du = dist[u]
        if nbrs and all(dist[w] <= du for w in nbrs):
            out.append(u)
    return frozenset(out)


def cejz_boundary(g: Graph, threads: int = 1) -> frozenset[int]:
    """CEJZ boundary: union of :func:`cejz_slice` over all sources."""
    fields = parallel_map(lambda v: bfs_distances(g, v), range(g.n), threads)
    out: frozenset[int] = frozenset()
    for df in fields:
        out |= cejz_slice(g, df)
    return out


def boundary(g: Graph, include_slices: bool = False, threads: int = 1) -> BoundaryReport:
    """Compute the full boundary report: one BFS per source, O(n(n+m)).

    Per-source slices are independent and may run in parallel; the report
    is merged in source order so output does not depend on thread count.

    Raises DisconnectedError on disconnected input (boundaries of
    disconnected graphs are deliberately not defined here).
    """

    def per_source(v: int) -> tuple[BoundarySlice, frozenset[int], int]:
        df = bfs_distances(g, v)  # raises DisconnectedError
        return boundary_slice(g, df), cejz_slice(g, df), max(df.dist)

    results = parallel_map(per_source, range(g.n), threads)

    members: set[int] = set()
    cejz: set[int] = set()
    witness: dict[int, int] = {}
    diam = 0
    slices = []
    for sl, cz, ecc in results:
        slices.append(sl)
        for u in sorted(sl.members):
            if u not in witness:
                witness[u] = sl.source
        members |= sl.members
        cejz |= cz
        diam = max(diam, ecc)

    report = BoundaryReport(
        n=g.n,
        m=g.m,
        max_degree=g.max_degree,
        diameter=diam,
        boundary=tuple(sorted(members)),
        cejz_boundary=tuple(sorted(cejz)),
        witness=witness,
        slices=tuple(slices) if include_slices else None,
    )
    _check_report(report)
    return report


def _check_report(report: BoundaryReport) -> None:
    # definitional: boundary is the union of the slices; CEJZ is contained in it
    if not set(report.cejz_boundary) <= set(report.boundary):
        raise AssertionError("CEJZ boundary escaped the averaged boundary")
    if sorted(report.witness) != list(report.boundary):
        raise AssertionError("witness map out of sync with boundary set")


def report_to_dict(report: BoundaryReport, include_slices: bool = False) -> dict:
    """Fixed JSON schema used by the CLI and the tests.

    Keys: n, m, max_degree, diameter, boundary, cejz_boundary, witness,
    and optionally slices (source id -> member list). JSON object keys are
    strings, so witness/slices keys are stringified vertex ids.
    """
    out = {
        "n": report.n,
        "m": report.m,
        "max_degree": report.max_degree,
        "diameter": report.diameter,
        "boundary": list(report.boundary),
        "cejz_boundary": list(report.cejz_boundary),
        "witness": {str(u): v for u, v in sorted(report.witness.items())},
    }
    if include_slices:
        if report.slices is None:
            raise ValueError("report was built without slices")
        out["slices"] = {str(sl.source): sorted(sl.members) for sl in report.slices}
    return out
