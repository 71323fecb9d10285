"""Exhaustive ground truth for hamiltonian cycles and paths under edge constraints.

The searches run on a host graph (usually the square of something) while
constraints reference a second "original" graph: a required incidence (v, c)
asks that the witness carry at least c edges at v that are edges of the
original graph, with all such designated edges globally distinct across the
demands. That single mechanism expresses every per-block property used by the
decision procedures: two original edges at one vertex, four distinct original
edges at four vertices, endpoint edges on hamiltonian paths, and so on.

Backtracking is depth first over sorted adjacency with pruning on required
edge viability, degree feasibility and connectivity, so a None result is a
certificate of absence. An optional node budget turns long searches into an
explicit BudgetExceeded instead of a silent answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, edge


class BudgetExceeded(RuntimeError):
    """Search stopped after expanding the allowed number of nodes."""


@dataclass(frozen=True)
class EdgeConstrainedSearch:
    """A hamiltonian cycle/path request with original-edge constraints."""
    host: Graph
    original: Graph | None = None
    required_edges: frozenset = frozenset()
    required_incidences: tuple = ()
    endpoints: tuple[int, int] | None = None

    def orig(self) -> Graph:
        return self.original if self.original is not None else self.host


@dataclass(frozen=True)
class Witness:
    order: tuple[int, ...]
    assignment: dict = field(default_factory=dict, compare=False)

    def edges(self, cyclic: bool) -> set[tuple[int, int]]:
        n = len(self.order)
        top = n if cyclic else n - 1
        return {edge(self.order[i], self.order[(i + 1) % n]) for i in range(top)}


def _match_incidences(witness_edges, orig_edges, demands):
    """Assign globally distinct original edges to the (vertex, count) demands.

    Kuhn matching on slots; returns {v: [edges]} or None.
    """
    available = sorted(e for e in witness_edges if e in orig_edges)
    slots = []
    for v, c in demands:
        slots.extend([v] * c)
    cand = [[i for i, e in enumerate(available) if s in e] for s in slots]
    match_of_edge: dict[int, int] = {}

    def try_slot(si, seen):
        for ei in cand[si]:
            if ei in seen:
                continue
            seen.add(ei)
            if ei not in match_of_edge or try_slot(match_of_edge[ei], seen):
                match_of_edge[ei] = si
                return True
        return False

    for si in range(len(slots)):
        if not try_slot(si, set()):
            return None
    out: dict[int, list] = {}
    for ei, si in match_of_edge.items():
        out.setdefault(slots[si], []).append(available[ei])
    for v in out:
        out[v].sort()
    return out


class _Search:
    def __init__(self, spec: EdgeConstrainedSearch, cyclic: bool,
                 node_budget: int | None):
        self.spec = spec
        self.cyclic = cyclic
        self.budget = node_budget
        self.nodes = 0
        g = spec.host
        self.g = g
        self.orig_edges = spec.orig().edges
        self.required = frozenset(edge(*e) for e in spec.required_edges)
        for e in self.required:
            if e not in g.edges:
                raise ValueError(f"required edge {e} not in host graph")
        self.demands = tuple((v, c) for v, c in spec.required_incidences if c > 0)
        for v, c in self.demands:
            if v not in g.vertices:
                raise ValueError(f"incidence vertex {v} not in host graph")

    # ---- feasibility shortcuts ------------------------------------------

    def _obviously_infeasible(self) -> bool:
        g = self.g
        req_at: dict[int, int] = {}
        for a, b in self.required:
            req_at[a] = req_at.get(a, 0) + 1
            req_at[b] = req_at.get(b, 0) + 1
        ends = set(self.spec.endpoints or ())
        for v, cnt in req_at.items():
            cap = 1 if (not self.cyclic and v in ends) else 2
            if cnt > cap:
                return True
        for v, c in self.demands:
            cap = 1 if (not self.cyclic and v in ends) else 2
            if c > cap:
                return True
            orig_deg = sum(1 for e in self.orig_edges if v in e)
            if c > orig_deg:
                return True
        return False

    # ---- main search -----------------------------------------------------

    def run(self) -> Witness | None:
        g = self.g
        n = g.n
        if self.cyclic:
            if n < 3:
                return None
        else:
            x, y = self.spec.endpoints
            if x == y or x not in g.vertices or y not in g.vertices:
                raise ValueError("path search needs two distinct endpoint vertices")
            if n == 1:
                return None
        if self._obviously_infeasible():
            return None
        if not g.is_connected():
            return None

        if self.cyclic:
            start = self._pick_start()
        else:
            start = self.spec.endpoints[0]
        self.start = start
        self.target = None if self.cyclic else self.spec.endpoints[1]

        order = [start]
        on_path = {start}
        used_required = set()
        out = self._dfs(order, on_path, used_required)
        return out

    def _pick_start(self) -> int:
        if self.demands:
            best = max(self.demands, key=lambda vc: (vc[1], -vc[0]))
            return best[0]
        if self.required:
            return min(x for e in self.required for x in e)
        return min(self.g.vertices, key=lambda v: (self.g.degree(v), v))

    def _closed(self, v, order, on_path) -> bool:
        """No further witness edge can ever be added at v."""
        if v not in on_path:
            return False
        if v == order[-1]:
            return False
        if self.cyclic and v == self.start:
            return False
        return True

    def _prune(self, order, on_path, used_required) -> bool:
        g = self.g
        tip = order[-1]
        # unused required edges must stay addable
        for e in self.required:
            if e in used_required:
                continue
            a, b = e
            if self._closed(a, order, on_path) or self._closed(b, order, on_path):
                return True
        # every unvisited vertex needs enough open neighbors
        for v in g.vertices:
            if v in on_path:
                continue
            avail = 0
            for w in g.neighbors(v):
                if w not in on_path or w == tip:
                    avail += 1
                elif self.cyclic and w == self.start:
                    avail += 1
            need = 2
            if not self.cyclic and (v == self.target):
                need = 1
            if avail < need:
                return True
        # connectivity of the unexplored region plus the tip
        rest = (self.g.vertices - on_path) | {tip}
        seen = {tip}
        stack = [tip]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w in rest and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != rest:
            return True
        # closed vertices must already satisfy their incidence counts
        for v, c in self.demands:
            if self._closed(v, order, on_path):
                cnt = 0
                idx = order.index(v)
                if idx > 0 and edge(order[idx - 1], v) in self.orig_edges:
                    cnt += 1
                if idx + 1 < len(order) and edge(v, order[idx + 1]) in self.orig_edges:
                    cnt += 1
                if cnt < c:
                    return True
        return False

    def _finish(self, order) -> Witness | None:
        w = Witness(tuple(order), {})
        wedges = w.edges(self.cyclic)
        if not self.required <= wedges:
            return None
        if self.demands:
            assignment = _match_incidences(wedges, self.orig_edges, self.demands)
            if assignment is None:
                return None
            return Witness(tuple(order), assignment)
        return w

    def _dfs(self, order, on_path, used_required) -> Witness | None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded(f"search exceeded {self.budget} nodes")
        g = self.g
        n = g.n
        tip = order[-1]
        if len(order) == n:
            if self.cyclic:
                if self.start in g.neighbors(tip):
                    return self._finish(order)
                return None
            if tip == self.target:
                return self._finish(order)
            return None
        if not self.cyclic and tip == self.target:
            return None
        if self._prune(order, on_path, used_required):
            return None
        for w in sorted(g.neighbors(tip)):
            if w in on_path:
                continue
            e = edge(tip, w)
            added = e in self.required
            order.append(w)
            on_path.add(w)
            if added:
                used_required.add(e)
            res = self._dfs(order, on_path, used_required)
            if res is not None:
                return res
            if added:
                used_required.discard(e)
            on_path.discard(w)
            order.pop()
        return None


def find_ham_cycle(spec: EdgeConstrainedSearch,
                   node_budget: int | None = None) -> Witness | None:
    """A constraint-satisfying hamiltonian cycle of the host, or None."""
    if spec.endpoints is not None:
        raise ValueError("cycle search takes no endpoints")
    import sys
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, spec.host.n * 8 + 200))
    try:
        return _Search(spec, cyclic=True, node_budget=node_budget).run()
    finally:
        sys.setrecursionlimit(old)


def find_ham_path(spec: EdgeConstrainedSearch,
                  node_budget: int | None = None) -> Witness | None:
    """A constraint-satisfying hamiltonian path between the endpoints, or None."""
    if spec.endpoints is None:
        raise ValueError("path search needs endpoints")
    if spec.host.n == 2:
        x, y = spec.endpoints
        if edge(x, y) in spec.host.edges:
            w = Witness((x, y), {})
            search = _Search(spec, cyclic=False, node_budget=node_budget)
            if search._obviously_infeasible():
                return None
            return search._finish([x, y])
        return None
    import sys
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, spec.host.n * 8 + 200))
    try:
        return _Search(spec, cyclic=False, node_budget=node_budget).run()
    finally:
        sys.setrecursionlimit(old)


def cycle_with(host: Graph, original: Graph,
               incidences=(), required_edges=(),
               node_budget: int | None = None) -> Witness | None:
    return find_ham_cycle(EdgeConstrainedSearch(
        host=host, original=original,
        required_edges=frozenset(edge(*e) for e in required_edges),
        required_incidences=tuple(incidences)), node_budget)


def path_with(host: Graph, original: Graph, x: int, y: int,
              incidences=(), required_edges=(),
              node_budget: int | None = None) -> Witness | None:
    return find_ham_path(EdgeConstrainedSearch(
        host=host, original=original,
        required_edges=frozenset(edge(*e) for e in required_edges),
        required_incidences=tuple(incidences),
        endpoints=(x, y)), node_budget)


def is_ham_connected(g: Graph, node_budget: int | None = None) -> bool:
    """Every vertex pair of g joined by a hamiltonian path (g used as given)."""
    if g.n < 2:
        raise ValueError("hamiltonian connectedness needs at least two vertices")
    vs = g.sorted_vertices()
    for i, x in enumerate(vs):
        for y in vs[i + 1:]:
            if path_with(g, g, x, y, node_budget=node_budget) is None:
                return False
    return True


# -- property checkers over a 2-block -------------------------------------

PROPERTY_KINDS = ("twoBlockCycle", "H4", "H5", "F4", "strongF3", "strongF3ends")


@dataclass(frozen=True)
class PropertyResult:
    ok: bool
    counterexample: tuple | None = None

    def __bool__(self):
        return self.ok


def _check_two_block(b: Graph, min_order: int):
    from .decomposition import decompose
    if b.n < min_order:
        raise ValueError(f"property needs a 2-block on at least {min_order} vertices")
    d = decompose(b)
    if len(d.blocks) != 1 or not d.blocks[0].is_two_block:
        raise ValueError("input is not a 2-block")


def verify_property(kind: str, b: Graph,
                    node_budget: int | None = None) -> PropertyResult:
    """Check one of the square-hamiltonicity properties on a 2-block.

    twoBlockCycle: for every ordered pair (v, w) a hamiltonian cycle of the
        square with both cycle edges at v original and one at w original,
        all distinct.
    H4 / H5: for every 4- / 5-subset a hamiltonian cycle of the square with
        a distinct original edge at each chosen vertex.
    F4: for every 4-subset and every choice of two path ends among them, a
        hamiltonian path with distinct original edges at the other two.
    strongF3: for every 3-subset, every ends choice and each end, a
        hamiltonian path with distinct original edges at the third vertex and
        at that end.
    strongF3ends: for every ordered pair (x, y), a hamiltonian x-y path with
        an original edge at x and either an original edge at y (distinct) or
        an edge of the path joining two neighbors of y.
    """
    import itertools
    if kind not in PROPERTY_KINDS:
        raise ValueError(f"unknown property kind {kind!r}")
    _check_two_block(b, 4 if kind in ("H4", "H5", "F4") else 3)
    sq = b.square()
    vs = b.sorted_vertices()

    if kind == "twoBlockCycle":
        for v in vs:
            for w in vs:
                if v == w:
                    continue
                if cycle_with(sq, b, [(v, 2), (w, 1)], node_budget=node_budget) is None:
                    return PropertyResult(False, (v, w))
        return PropertyResult(True)

    if kind in ("H4", "H5"):
        r = 4 if kind == "H4" else 5
        if b.n < r:
            raise ValueError(f"{kind} needs at least {r} vertices")
        for sub in itertools.combinations(vs, r):
            if cycle_with(sq, b, [(v, 1) for v in sub],
                          node_budget=node_budget) is None:
                return PropertyResult(False, sub)
        return PropertyResult(True)

    if kind == "F4":
        for sub in itertools.combinations(vs, 4):
            for x1, x2 in itertools.combinations(sub, 2):
                rest = [v for v in sub if v not in (x1, x2)]
                if path_with(sq, b, x1, x2, [(v, 1) for v in rest],
                             node_budget=node_budget) is None:
                    return PropertyResult(False, (x1, x2, *rest))
        return PropertyResult(True)

    if kind == "strongF3":
        for sub in itertools.combinations(vs, 3):
            for x3 in sub:
                x1, x2 = (v for v in sub if v != x3)
                for xi in (x1, x2):
                    if path_with(sq, b, x1, x2, [(x3, 1), (xi, 1)],
                                 node_budget=node_budget) is None:
                        return PropertyResult(False, (x1, x2, x3, xi))
        return PropertyResult(True)

    # strongF3ends
    for x in vs:
        for y in vs:
            if x == y:
                continue
            if path_with(sq, b, x, y, [(x, 1), (y, 1)],
                         node_budget=node_budget) is not None:
                continue
            ok = False
            for u, v in itertools.combinations(sorted(b.neighbors(y)), 2):
                if path_with(sq, b, x, y, [(x, 1)], required_edges=[(u, v)],
                             node_budget=node_budget) is not None:
                    ok = True
                    break
            if not ok:
                return PropertyResult(False, (x, y))
    return PropertyResult(True)
