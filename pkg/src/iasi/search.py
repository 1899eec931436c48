"""Exhaustive existence search for set-indexers over finite ground sets.

find_labeling backtracks over vertices in descending-degree order (ties by
name), trying candidate labels drawn from the non-empty subsets of the
ground set in ascending size, then ascending bit pattern. It prunes on
repeated vertex labels, repeated edge labels, and per-edge violations of the
requested mode, so an ``exhausted`` outcome is a proof of non-existence
over the given ground set and size caps. Outcomes are deterministic: the
found labeling is always the first one in the induced lexicographic order.

Ground-set cardinality floors: a graph on n vertices needs at least
ceil(log2(n+1)) ground elements (n distinct non-empty subsets must exist),
and C(|X|, l) >= n when every vertex label must have size l.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidSpecError
from .graph import Graph, edge_id
from .labeling import (
    GRAPH_CLASS_BOTH,
    GRAPH_CLASS_STRONG,
    GRAPH_CLASS_WEAK,
    SetLabeling,
    VerificationReport,
    verify,
)
from .setcore import DEFAULT_UNIVERSE_BOUND, IntSet

MODE_IASI = "iasi"
MODE_WEAK = "weak"
MODE_STRONG = "strong"
MODES = (MODE_IASI, MODE_WEAK, MODE_STRONG)

STATUS_FOUND = "found"
STATUS_EXHAUSTED = "exhausted"
STATUS_TIMEOUT = "timeout"


@dataclass(frozen=True)
class SearchSpec:
    """What to search for: mode, ground set, and optional label constraints.

    time_budget is a wall-clock cap in seconds; node_budget caps the number
    of candidate placements and gives a deterministic cutoff.
    """

    mode: str
    ground: IntSet
    max_label_size: int | None = None
    uniform_vertex_size: int | None = None
    time_budget: float | None = None
    node_budget: int | None = None

    def validate(self) -> None:
        if self.mode not in MODES:
            raise InvalidSpecError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if len(self.ground) == 0:
            raise InvalidSpecError("ground set must be non-empty")
        if 2 * self.ground.max() > self.ground.universe_bound:
            raise InvalidSpecError(
                f"edge labels can reach {2 * self.ground.max()}, above the universe "
                f"bound {self.ground.universe_bound}; raise the bound or shrink the ground"
            )
        if self.uniform_vertex_size is not None:
            if self.uniform_vertex_size < 1:
                raise InvalidSpecError("uniform_vertex_size must be >= 1")
            if self.uniform_vertex_size > len(self.ground):
                raise InvalidSpecError(
                    f"uniform_vertex_size {self.uniform_vertex_size} exceeds "
                    f"|ground| = {len(self.ground)}"
                )
        if self.max_label_size is not None and self.max_label_size < 1:
            raise InvalidSpecError("max_label_size must be >= 1")
        if self.time_budget is not None and self.time_budget <= 0:
            raise InvalidSpecError("time_budget must be positive")
        if self.node_budget is not None and self.node_budget < 1:
            raise InvalidSpecError("node_budget must be >= 1")


@dataclass(frozen=True)
class SearchOutcome:
    status: str
    labeling: SetLabeling | None
    nodes_expanded: int
    report: VerificationReport | None

    @property
    def found(self) -> bool:
        return self.status == STATUS_FOUND


def ground_set_lower_bound(n: int) -> int:
    """Smallest possible |X| for n vertices: ceil(log2(n+1))."""
    if n < 1:
        raise InvalidSpecError(f"vertex count must be >= 1, got {n}")
    # ceil(log2(n+1)) == bit_length(n), exact in integer arithmetic
    return n.bit_length()


def uniform_ground_set_lower_bound(n: int, l: int) -> int:
    """Smallest m with C(m, l) >= n."""
    if n < 1:
        raise InvalidSpecError(f"vertex count must be >= 1, got {n}")
    if l < 1:
        raise InvalidSpecError(f"label size must be >= 1, got {l}")
    m = l
    while math.comb(m, l) < n:
        m += 1
    return m


def mode_satisfied(report: VerificationReport, mode: str) -> bool:
    """Does a verification report meet a search mode?"""
    if mode == MODE_IASI:
        return report.is_iasi
    if mode == MODE_WEAK:
        return report.is_iasi and report.graph_class in (GRAPH_CLASS_WEAK, GRAPH_CLASS_BOTH)
    if mode == MODE_STRONG:
        return report.is_iasi and report.graph_class in (GRAPH_CLASS_STRONG, GRAPH_CLASS_BOTH)
    raise InvalidSpecError(f"unknown mode {mode!r}")


def _candidate_labels(spec: SearchSpec) -> list[IntSet]:
    """Non-empty subsets of the ground set, ascending size then bit pattern."""
    elems = spec.ground.elements
    bound = spec.ground.universe_bound
    if spec.uniform_vertex_size is not None:
        sizes = [spec.uniform_vertex_size]
    else:
        top = min(spec.max_label_size or len(elems), len(elems))
        sizes = list(range(1, top + 1))
    out: list[IntSet] = []
    for size in sizes:
        for combo in combinations(elems, size):
            out.append(IntSet(combo, bound))
    return out


def _edge_ok(mode: str, a: IntSet, b: IntSet, label: IntSet) -> bool:
    if mode == MODE_WEAK:
        return len(label) == max(len(a), len(b))
    if mode == MODE_STRONG:
        return len(label) == len(a) * len(b)
    return True


class _Budget:
    __slots__ = ("deadline", "node_budget", "nodes", "hit")

    def __init__(self, spec: SearchSpec):
        self.deadline = time.monotonic() + spec.time_budget if spec.time_budget else None
        self.node_budget = spec.node_budget
        self.nodes = 0
        self.hit = False

    def tick(self) -> bool:
        """Count one placement attempt; True when a budget has run out."""
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            self.hit = True
        elif self.deadline is not None and self.nodes % 256 == 0:
            if time.monotonic() > self.deadline:
                self.hit = True
        return self.hit


def find_labeling(g: Graph, spec: SearchSpec) -> SearchOutcome:
    """Backtracking existence search; exhausted proves non-existence in-bounds."""
    spec.validate()
    if g.num_vertices == 0:
        raise InvalidSpecError("cannot search an empty graph")
    candidates = _candidate_labels(spec)
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    budget = _Budget(spec)
    assignment: dict[str, IntSet] = {}
    used_vertex_labels: set[IntSet] = set()
    used_edge_labels: set[IntSet] = set()

    # sumsets cannot overflow: validate() caps 2*max(ground) by the bound
    def place(depth: int) -> bool:
        if depth == len(order):
            return True
        v = order[depth]
        fixed_neighbors = [u for u in g.neighbors(v) if u in assignment]
        for cand in candidates:
            if budget.tick():
                return False
            if cand in used_vertex_labels:
                continue
            new_edge_labels: list[IntSet] = []
            ok = True
            for u in fixed_neighbors:
                lab = cand + assignment[u]
                if (
                    not _edge_ok(spec.mode, cand, assignment[u], lab)
                    or lab in used_edge_labels
                    or lab in new_edge_labels
                ):
                    ok = False
                    break
                new_edge_labels.append(lab)
            if not ok:
                continue
            assignment[v] = cand
            used_vertex_labels.add(cand)
            used_edge_labels.update(new_edge_labels)
            if place(depth + 1):
                return True
            if budget.hit:
                return False
            del assignment[v]
            used_vertex_labels.discard(cand)
            used_edge_labels.difference_update(new_edge_labels)
        return False

    solved = place(0)
    if budget.hit:
        return SearchOutcome(STATUS_TIMEOUT, None, budget.nodes, None)
    if not solved:
        return SearchOutcome(STATUS_EXHAUSTED, None, budget.nodes, None)
    labeling = SetLabeling({v: assignment[v] for v in g.vertices})
    report = verify(g, labeling)
    if not mode_satisfied(report, spec.mode):
        raise AssertionError(
            "search returned a labeling that fails re-verification; this is a bug"
        )
    return SearchOutcome(STATUS_FOUND, labeling, budget.nodes, report)


def prefix_ground(m: int, universe_bound: int = DEFAULT_UNIVERSE_BOUND) -> IntSet:
    """The canonical ground ladder rung {0, 1, ..., m-1}."""
    if m < 1:
        raise InvalidSpecError(f"ground prefix size must be >= 1, got {m}")
    return IntSet(range(m), universe_bound)


def minimal_ground_set(
    g: Graph,
    mode: str,
    *,
    uniform_vertex_size: int | None = None,
    max_label_size: int | None = None,
    time_budget: float | None = None,
    exact_cap: int | None = None,
    universe_bound: int = DEFAULT_UNIVERSE_BOUND,
) -> tuple[int, SearchOutcome]:
    """Smallest ground-set cardinality m for which a labeling exists.

    By default the ladder climbs the prefixes {0..m-1}, starting from the
    pigeonhole floors. With exact_cap, every m-subset of {0..exact_cap} is
    tried instead, bounding the error of the prefix convention on tiny
    instances. Returns (m, outcome); a timeout outcome reports the rung at
    which the budget ran out.
    """
    if g.num_vertices == 0:
        raise InvalidSpecError("cannot search an empty graph")
    n = g.num_vertices
    m = ground_set_lower_bound(n)
    if uniform_vertex_size is not None:
        m = max(m, uniform_ground_set_lower_bound(n, uniform_vertex_size))
    deadline = time.monotonic() + time_budget if time_budget else None

    def remaining() -> float | None:
        if deadline is None:
            return None
        return max(deadline - time.monotonic(), 1e-9)

    if exact_cap is None:
        while True:
            spec = SearchSpec(
                mode=mode,
                ground=prefix_ground(m, universe_bound),
                max_label_size=max_label_size,
                uniform_vertex_size=uniform_vertex_size,
                time_budget=remaining(),
            )
            outcome = find_labeling(g, spec)
            if outcome.status != STATUS_EXHAUSTED:
                return m, outcome
            m += 1

    last = SearchOutcome(STATUS_EXHAUSTED, None, 0, None)
    while m <= exact_cap + 1:
        for elems in combinations(range(exact_cap + 1), m):
            spec = SearchSpec(
                mode=mode,
                ground=IntSet(elems, universe_bound),
                max_label_size=max_label_size,
                uniform_vertex_size=uniform_vertex_size,
                time_budget=remaining(),
            )
            outcome = find_labeling(g, spec)
            if outcome.status == STATUS_FOUND:
                return m, outcome
            if outcome.status == STATUS_TIMEOUT:
                return m, outcome
            last = outcome
        m += 1
    return exact_cap + 1, last
