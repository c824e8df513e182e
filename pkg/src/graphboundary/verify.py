"""Check battery: run every machine-verifiable statement against one graph.

Each check returns a CheckOutcome; a failed outcome on connected input
always indicates a bug somewhere in this package, never a counterexample,
because every checked statement is a theorem.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boundary import (
    BoundaryReport,
    boundary,
    laplacian_matrix,
    laplacian_slice,
)
from .core import Graph, bfs_distances, distance_matrix, is_path_graph
from .euclid import WitnessNotFoundError, classify_prop4, verify_witness
from .generators import GridGraph
from .layers import (
    InvariantViolation,
    check_dichotomy,
    check_mps,
    check_theorem1,
    check_theorem2,
    layer_decompose,
)

ALL_CHECKS = (
    "prop1",
    "prop2",
    "prop3",
    "thm1",
    "thm2",
    "mps",
    "laplacian",
    "dichotomy",
    "prop4",
)


@dataclass(frozen=True)
class CheckOutcome:
    check: str
    passed: bool
    detail: str


def run_battery(
    g: Graph,
    checks: tuple[str, ...] = ALL_CHECKS,
    gg: GridGraph | None = None,
    report: BoundaryReport | None = None,
) -> list[CheckOutcome]:
    """Run the named checks; prop4 is skipped unless ``gg`` supplies coordinates."""
    unknown = [c for c in checks if c not in ALL_CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {unknown}")
    if report is None:
        report = boundary(g, include_slices=True)
    out = []
    for name in checks:
        if name == "prop4" and gg is None:
            continue
        out.append(_RUNNERS[name](g, report, gg))
    return out


def _outcome(name: str, passed: bool, detail: str) -> CheckOutcome:
    return CheckOutcome(check=name, passed=passed, detail=detail)


def _rat(value) -> str:
    """num/den plus a decimal rendering; decisions never use the decimal."""
    return f"{value} ({float(value):.6g})"


def _check_prop1(g, report, gg):
    ok = set(report.cejz_boundary) <= set(report.boundary)
    return _outcome(
        "prop1", ok, f"cejz={len(report.cejz_boundary)} boundary={len(report.boundary)}"
    )


def _check_prop2(g, report, gg):
    leaves = {u for u in range(g.n) if g.degree(u) == 1}
    bset = set(report.boundary)
    ok = leaves <= bset
    detail = f"leaves={len(leaves)}"
    if g.m == g.n - 1 and g.n >= 2:  # tree: boundary is exactly the leaf set
        ok = ok and bset == leaves
        detail += " tree=yes"
    return _outcome("prop2", ok, detail)


def _check_prop3(g, report, gg):
    size = len(report.boundary)
    if g.n < 2:
        return _outcome("prop3", size == 0, "single vertex")
    ok = size >= 2 and (size != 2 or is_path_graph(g))
    return _outcome("prop3", ok, f"boundary={size}")


def _check_thm1(g, report, gg):
    if g.n < 2:  # the bound is stated for graphs with at least two vertices
        return _outcome("thm1", True, "skipped: single vertex")
    entry = check_theorem1(g, report)
    return _outcome(
        "thm1", entry.passed, f"observed={entry.observed} bound={_rat(entry.bound)}"
    )


def _check_thm2(g, report, gg):
    if g.n < 2:
        return _outcome("thm2", True, "skipped: single vertex")
    worst = None
    for v in range(g.n):
        entry = check_theorem2(g, v, report)
        if worst is None or entry.margin < worst.margin:
            worst = entry
        if not entry.passed:
            return _outcome(
                "thm2", False,
                f"source={v} observed={entry.observed} bound={_rat(entry.bound)}",
            )
    return _outcome("thm2", True, f"sources={g.n} min_margin={_rat(worst.margin)}")


def _check_mps(g, report, gg):
    if g.n < 2:
        return _outcome("mps", True, "skipped: single vertex")
    entry = check_mps(g, report)
    return _outcome("mps", entry.passed, f"cejz={entry.observed} delta+2={entry.bound}")


def _check_laplacian(g, report, gg):
    lap = laplacian_matrix(g)
    for v in range(g.n):
        df = bfs_distances(g, v)
        if laplacian_slice(g, df, lap) != report.slices[v].members:
            return _outcome("laplacian", False, f"mismatch at source {v}")
    return _outcome("laplacian", True, f"sources={g.n}")


def _check_dichotomy(g, report, gg):
    delta = g.max_degree
    for v in range(g.n):
        try:
            check_dichotomy(layer_decompose(g, v), delta)
        except InvariantViolation as exc:
            return _outcome("dichotomy", False, str(exc))
    return _outcome("dichotomy", True, f"sources={g.n}")


def _check_prop4(g, report, gg):
    try:
        pairs = classify_prop4(gg, report)
    except WitnessNotFoundError as exc:
        return _outcome("prop4", False, str(exc))
    dm = distance_matrix(g)
    bad = [u for u, w in pairs if not verify_witness(w, dm)]
    if bad:
        return _outcome("prop4", False, f"unverifiable witnesses for {bad}")
    return _outcome("prop4", True, f"full_degree_boundary={len(pairs)}")


_RUNNERS = {
    "prop1": _check_prop1,
    "prop2": _check_prop2,
    "prop3": _check_prop3,
    "thm1": _check_thm1,
    "thm2": _check_thm2,
    "mps": _check_mps,
    "laplacian": _check_laplacian,
    "dichotomy": _check_dichotomy,
    "prop4": _check_prop4,
}
