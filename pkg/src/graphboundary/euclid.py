"""Geodesic non-uniqueness on lattice graphs, and the disk-sector check.

A full-degree lattice vertex (degree 2d) that lands in the boundary must
exhibit one of two forms of geodesic non-uniqueness with respect to some
certifying vertex v:

* equal-distance neighbor: a neighbor w of u with d(w, v) = d(u, v);
* antipodal descent: an axis whose two opposite neighbors of u are both
  one step closer to v, i.e. two shortest paths leaving u in opposite
  directions.

This is a theorem for lattice discretizations, so a fruitless witness
search raises an error instead of returning quietly.

This module is the only place floating point enters the package, in the
closed-form sector geometry and the finite-difference identity check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .boundary import BoundaryReport, boundary
from .core import DistanceMatrix, Graph, GraphError, distance_matrix
from .generators import GridGraph

CASE_EQUAL_DISTANCE = "equal_distance_neighbor"
CASE_ANTIPODAL_DESCENT = "antipodal_descent"


class WitnessNotFoundError(GraphError):
    """Non-uniqueness witness missing for a full-degree boundary vertex: a bug."""


class AlphaTooLargeError(GraphError):
    """Sector opening too wide for the diameter formula diam = r."""


@dataclass(frozen=True)
class NonUniquenessWitness:
    """One certified instance of geodesic non-uniqueness.

    ``case`` is CASE_EQUAL_DISTANCE (neighbors holds the tied neighbor) or
    CASE_ANTIPODAL_DESCENT (neighbors holds the axis pair, axis gives the
    direction index).
    """

    vertex: int
    witness: int
    case: str
    neighbors: tuple[int, ...]
    axis: int | None = None


def verify_witness(w: NonUniquenessWitness, dm: DistanceMatrix) -> bool:
    """Re-check the witness's defining distance equalities against ``dm``."""
    du = dm[w.vertex, w.witness]
    if w.case == CASE_EQUAL_DISTANCE:
        return len(w.neighbors) == 1 and dm[w.neighbors[0], w.witness] == du
    if w.case == CASE_ANTIPODAL_DESCENT:
        return len(w.neighbors) == 2 and all(
            dm[x, w.witness] == du - 1 for x in w.neighbors
        )
    return False


def _search(
    u: int,
    certifiers: list[int],
    axis_pairs: list[tuple[int, int]],
    nbrs: tuple[int, ...],
    dm: DistanceMatrix,
    collect_all: bool,
) -> list[NonUniquenessWitness]:
    """Antipodal-descent witnesses first, equal-distance ties second."""
    found = []
    for v in certifiers:
        du = dm[u, v]
        for axis, (a, b) in enumerate(axis_pairs):
            if dm[a, v] == du - 1 and dm[b, v] == du - 1:
                found.append(
                    NonUniquenessWitness(u, v, CASE_ANTIPODAL_DESCENT, (a, b), axis)
                )
                if not collect_all:
                    return found
    for v in certifiers:
        du = dm[u, v]
        for w in nbrs:
            if dm[w, v] == du:
                found.append(NonUniquenessWitness(u, v, CASE_EQUAL_DISTANCE, (w,)))
                if not collect_all:
                    return found
    return found


def _certifiers(report: BoundaryReport, u: int) -> list[int]:
    assert report.slices is not None
    return [sl.source for sl in report.slices if u in sl.members]


def classify_prop4(
    gg: GridGraph,
    report: BoundaryReport | None = None,
    all_witnesses: bool = False,
) -> list[tuple[int, NonUniquenessWitness]]:
    """Witness geodesic non-uniqueness for every full-degree boundary vertex.

    Returns (vertex, witness) pairs ordered by vertex id; with
    ``all_witnesses`` every witness of both cases is enumerated, otherwise
    the first one in the deterministic search order is kept. Raises
    WitnessNotFoundError if some full-degree boundary vertex has none,
    which would mean the classifier or the boundary computation is broken.
    """
    g = gg.graph
    if report is None:
        report = boundary(g, include_slices=True)
    dm = distance_matrix(g)
    index = {c: vid for vid, c in enumerate(gg.coordinates)}
    full = 2 * gg.dimension
    out = []
    for u in report.boundary:
        if g.degree(u) != full:
            continue
        cu = gg.coordinates[u]
        pairs = []
        for axis in range(gg.dimension):
            plus = list(cu)
            plus[axis] += 1
            minus = list(cu)
            minus[axis] -= 1
            pairs.append((index[tuple(plus)], index[tuple(minus)]))
        hits = _search(u, _certifiers(report, u), pairs, g.adjacency[u], dm, all_witnesses)
        if not hits:
            raise WitnessNotFoundError(f"no witness for full-degree boundary vertex {u}")
        out.extend((u, h) for h in hits)
    return out


def classify_cycle(
    g: Graph,
    report: BoundaryReport | None = None,
    all_witnesses: bool = False,
) -> list[tuple[int, NonUniquenessWitness]]:
    """Cycle graphs viewed as one-dimensional lattice rings (2d = 2).

    Every vertex has exactly one antipodal neighbor pair: its two cycle
    neighbors. The wrap-around edge keeps a cycle from being a GridGraph,
    so this dedicated view exists for it.
    """
    if g.n < 3 or any(len(a) != 2 for a in g.adjacency):
        raise ValueError("not a cycle graph")
    if report is None:
        report = boundary(g, include_slices=True)
    dm = distance_matrix(g)
    out = []
    for u in report.boundary:
        nbrs = g.adjacency[u]
        hits = _search(u, _certifiers(report, u), [nbrs], nbrs, dm, all_witnesses)
        if not hits:
            raise WitnessNotFoundError(f"no witness for cycle vertex {u}")
        out.extend((u, h) for h in hits)
    return out


@dataclass(frozen=True)
class SectorCheck:
    """Closed-form quantities for the narrow disk sector, opening 2*pi*alpha.

    ``bound`` is (d - 1) * area / diameter simplified in closed form to
    pi * r * alpha; the reachable boundary part is the arc, 2 * pi * r *
    alpha, so ``ratio`` is exactly 2: the bound is sharp up to that factor.
    """

    dimension: int
    radius: float
    alpha: float
    arc_length: float
    area: float
    diameter: float
    bound: float
    ratio: float


def sector_check(r: float, alpha: float, alpha_max: float = 0.1) -> SectorCheck:
    """Evaluate the sector family's boundary bound; ratio must be exactly 2.

    Requires 0 < alpha <= alpha_max (default 0.1) so the diameter is the
    radius rather than the far chord; wider openings raise
    AlphaTooLargeError.
    """
    if r <= 0:
        raise ValueError("radius must be positive")
    if alpha <= 0:
        raise ValueError("opening fraction must be positive")
    if alpha > alpha_max:
        raise AlphaTooLargeError(f"alpha={alpha} exceeds {alpha_max}; diameter formula breaks")
    base = math.pi * r * alpha  # shared factor keeps the float ratio exact
    arc = 2.0 * base
    area = r * base
    check = SectorCheck(
        dimension=2,
        radius=r,
        alpha=alpha,
        arc_length=arc,
        area=area,
        diameter=r,
        bound=base,
        ratio=arc / base,
    )
    if not (check.arc_length >= check.bound and check.ratio == 2.0):
        raise AssertionError("sector closed form violated its own inequality")
    return check


def radial_laplacian_identity_check(
    d: int,
    points: list[tuple[float, ...]] | np.ndarray,
    step: float = 1e-3,
) -> float:
    """Max relative deviation of the finite-difference Laplacian of the norm.

    The Laplacian of x -> |x| in R^d equals (d - 1) / |x| away from the
    origin. Each sample point is checked with a central second-order
    stencil of the given step; points must stay well clear of the origin
    (|x| > 2 * step enforced).
    """
    if d < 2:
        raise ValueError("identity needs d >= 2")
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts[None, :]
    if pts.shape[1] != d:
        raise ValueError(f"points must have {d} components")
    norms = np.linalg.norm(pts, axis=1)
    if np.any(norms <= 2 * step):
        raise ValueError("sample points too close to the origin")
    worst = 0.0
    for x, r in zip(pts, norms):
        lap = 0.0
        for i in range(d):
            e = np.zeros(d)
            e[i] = step
            lap += (
                np.linalg.norm(x + e) - 2.0 * r + np.linalg.norm(x - e)
            ) / step**2
        expected = (d - 1) / r
        worst = max(worst, abs(lap - expected) / expected)
    return worst
