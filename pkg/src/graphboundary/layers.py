"""Distance-layer decomposition and the isoperimetric inequality checks.

The layer decomposition from a source v0 partitions the vertex set by hop
distance: A_i = {v : d(v, v0) = i}. Two theorems are verified here:

* global bound:      |boundary|            >= |V| / (2 * Delta * diam)
* per-source bound:  |slice of any v|      >= (|V| - 1) / (2 * Delta * (diam - 1) + 1)

plus the cited lower bound |CEJZ boundary| >= log2(Delta + 2).

Every pass/fail decision is made in exact rational arithmetic: Fraction
comparisons for the two size bounds, and the log2 bound rewritten as the
integer comparison 2**observed >= Delta + 2. Floats appear only as display
values, never in a decision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .boundary import BoundaryReport, boundary, boundary_slice
from .core import Graph, GraphError, SingleVertexError, bfs_distances


class InvariantViolation(GraphError):
    """A proven statement failed on concrete input: an implementation bug."""


@dataclass(frozen=True)
class LayerDecomposition:
    """Layers A_0..A_ell from a source, with inter-layer edge counts.

    ``cross_edges[i-1]`` is |E(A_{i-1}, A_i)| for 1 <= i <= ell.
    ``slice_per_layer[i]`` counts members of the source's boundary slice
    inside A_i, for 0 <= i <= ell.
    """

    source: int
    ell: int
    layers: tuple[tuple[int, ...], ...]
    cross_edges: tuple[int, ...]
    slice_per_layer: tuple[int, ...]


@dataclass(frozen=True)
class BoundEntry:
    """One inequality check: observed quantity vs exact rational bound.

    ``margin`` is observed minus bound in the entry's comparison domain.
    For the two size bounds that domain is the set size itself. For the
    log2 bound the comparison is done as 2**observed >= Delta + 2, so
    ``bound`` is Delta + 2 and ``margin`` is 2**observed - (Delta + 2);
    this keeps the arithmetic exact.
    """

    check: str
    source: int | None
    observed: int
    bound: Fraction
    margin: Fraction
    passed: bool


@dataclass(frozen=True)
class InequalityReport:
    """Graph statistics plus the three inequality entries."""

    n: int
    m: int
    delta: int
    diam: int
    boundary_size: int
    cejz_size: int
    min_slice_size: int
    theorem1: BoundEntry
    theorem2_min: BoundEntry
    mps: BoundEntry
    mps_bound_log2: float

    @property
    def all_passed(self) -> bool:
        return self.theorem1.passed and self.theorem2_min.passed and self.mps.passed


def layer_decompose(g: Graph, v0: int) -> LayerDecomposition:
    """Decompose the connected graph into distance layers from v0."""
    df = bfs_distances(g, v0)
    ell = max(df.dist)
    layer_lists: list[list[int]] = [[] for _ in range(ell + 1)]
    for u, d in enumerate(df.dist):
        layer_lists[d].append(u)
    cross = [0] * ell
    for u, w in g.edges():
        du, dw = df.dist[u], df.dist[w]
        if du != dw:
            cross[max(du, dw) - 1] += 1  # BFS layers differ by at most 1
    members = boundary_slice(g, df).members
    per_layer = [0] * (ell + 1)
    for u in members:
        per_layer[df.dist[u]] += 1
    return LayerDecomposition(
        source=v0,
        ell=ell,
        layers=tuple(tuple(sorted(layer)) for layer in layer_lists),
        cross_edges=tuple(cross),
        slice_per_layer=tuple(per_layer),
    )


def check_dichotomy(ld: LayerDecomposition, delta: int) -> list[bool]:
    """Verify the per-layer edge/boundary dichotomy of the decomposition.

    For 1 <= i <= ell - 1:
        |E(A_{i-1}, A_i)| <= |E(A_i, A_{i+1})| + delta * |slice ∩ A_i|
    and for the last layer:
        |E(A_{ell-1}, A_ell)| <= delta * |A_ell|  with  A_ell ⊆ slice.

    These hold for every connected graph; a failure raises
    InvariantViolation naming the offending layer, because it can only
    mean a bug.
    """
    ell = ld.ell
    passes = []
    for i in range(1, ell):
        ok = ld.cross_edges[i - 1] <= ld.cross_edges[i] + delta * ld.slice_per_layer[i]
        if not ok:
            raise InvariantViolation(f"dichotomy failed at layer {i} (source {ld.source})")
        passes.append(ok)
    if ell >= 1:
        last = len(ld.layers[ell])
        if ld.slice_per_layer[ell] != last:
            raise InvariantViolation(
                f"outermost layer not fully in the slice (source {ld.source})"
            )
        if ld.cross_edges[ell - 1] > delta * last:
            raise InvariantViolation(
                f"too many edges into the outermost layer (source {ld.source})"
            )
        passes.append(True)
    return passes


def _stats(g: Graph, report: BoundaryReport | None) -> BoundaryReport:
    if report is None:
        report = boundary(g, include_slices=True)
    return report


def check_theorem1(g: Graph, report: BoundaryReport | None = None) -> BoundEntry:
    """Global isoperimetric bound |boundary| >= |V| / (2 * Delta * diam)."""
    if g.n < 2:
        raise SingleVertexError("bound needs at least two vertices")
    report = _stats(g, report)
    bound = Fraction(g.n, 2 * g.max_degree * report.diameter)
    observed = len(report.boundary)
    return BoundEntry(
        check="theorem1",
        source=None,
        observed=observed,
        bound=bound,
        margin=Fraction(observed) - bound,
        passed=observed >= bound,
    )


def theorem2_bound(n: int, delta: int, diam: int) -> Fraction:
    # diam = 1 collapses the denominator to 1, so complete graphs need no special case
    return Fraction(n - 1, 2 * delta * (diam - 1) + 1)


def check_theorem2(g: Graph, v: int, report: BoundaryReport | None = None) -> BoundEntry:
    """Per-source refined bound |slice of v| >= (|V|-1) / (2*Delta*(diam-1)+1)."""
    if g.n < 2:
        raise SingleVertexError("bound needs at least two vertices")
    report = _stats(g, report)
    assert report.slices is not None
    observed = len(report.slices[v].members)
    bound = theorem2_bound(g.n, g.max_degree, report.diameter)
    return BoundEntry(
        check="theorem2",
        source=v,
        observed=observed,
        bound=bound,
        margin=Fraction(observed) - bound,
        passed=observed >= bound,
    )


def check_mps(g: Graph, report: BoundaryReport | None = None) -> BoundEntry:
    """Cited bound |CEJZ boundary| >= log2(Delta + 2), decided in integers."""
    report = _stats(g, report)
    observed = len(report.cejz_boundary)
    target = g.max_degree + 2
    return BoundEntry(
        check="mps",
        source=None,
        observed=observed,
        bound=Fraction(target),
        margin=Fraction(2**observed - target),
        passed=2**observed >= target,
    )


def inequality_report(g: Graph, report: BoundaryReport | None = None) -> InequalityReport:
    """Assemble all three checks; theorem2 is reported at its weakest source."""
    report = _stats(g, report)
    assert report.slices is not None
    slice_sizes = [len(sl.members) for sl in report.slices]
    min_size = min(slice_sizes)
    weakest = slice_sizes.index(min_size)
    return InequalityReport(
        n=g.n,
        m=g.m,
        delta=g.max_degree,
        diam=report.diameter,
        boundary_size=len(report.boundary),
        cejz_size=len(report.cejz_boundary),
        min_slice_size=min_size,
        theorem1=check_theorem1(g, report),
        theorem2_min=check_theorem2(g, weakest, report),
        mps=check_mps(g, report),
        mps_bound_log2=math.log2(g.max_degree + 2),
    )


def slice_overlap_stats(g: Graph, report: BoundaryReport | None = None) -> dict:
    """How many sources certify each boundary member (overlap of the slices).

    Exploratory output only; no theorem fixes what these numbers should be.
    """
    report = _stats(g, report)
    assert report.slices is not None
    counts = {u: 0 for u in report.boundary}
    for sl in report.slices:
        for u in sl.members:
            counts[u] += 1
    values = sorted(counts.values())
    return {
        "boundary_size": len(values),
        "min_certifiers": values[0] if values else 0,
        "max_certifiers": values[-1] if values else 0,
        "mean_certifiers": Fraction(sum(values), len(values)) if values else Fraction(0),
        "certifier_counts": counts,
    }


# CSV sweep schema (fixed): one row per (graph, check). The check column
# identifies the row; bounds and margins are num/den pairs of the exact
# rationals from BoundEntry.
SWEEP_COLUMNS = (
    "family",
    "params",
    "check",
    "n",
    "m",
    "delta",
    "diam",
    "boundary_size",
    "cejz_size",
    "bound_value_num",
    "bound_value_den",
    "margin_num",
    "margin_den",
    "pass",
)


def sweep_rows(family: str, params: str, g: Graph) -> list[dict]:
    """InequalityReport flattened into one CSV row per check."""
    rep = inequality_report(g)
    rows = []
    for entry in (rep.theorem1, rep.theorem2_min, rep.mps):
        rows.append(
            {
                "family": family,
                "params": params,
                "check": entry.check,
                "n": rep.n,
                "m": rep.m,
                "delta": rep.delta,
                "diam": rep.diam,
                "boundary_size": rep.boundary_size,
                "cejz_size": rep.cejz_size,
                "bound_value_num": entry.bound.numerator,
                "bound_value_den": entry.bound.denominator,
                "margin_num": entry.margin.numerator,
                "margin_den": entry.margin.denominator,
                "pass": entry.passed,
            }
        )
    return rows
