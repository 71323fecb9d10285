"""Building hamiltonian cycles and paths in the square of a graph.

The cycle constructor works bottom up. Every 2-block gets a hamiltonian
cycle of its own square carrying, for each cutvertex i with label m_i, that
many distinct block edges at i (the oracle returns the cycle together with
the distinct-edge assignment). Every nontrivial caterpillar component of
the bridge forest gets a hamiltonian cycle of its square through dedicated
end-edges and neighbor-pair edges. Then cutvertices are processed one at a
time: each cycle meeting the cutvertex is cut open exactly at that vertex's
assigned edges, and the resulting fragments, plus any pendant leaves, are
chained back into a single cycle. Every fragment end is a neighbor of the
cutvertex, so consecutive fragment ends are adjacent in the square and any
fixed chaining order works; we use ascending block index with leaves last.

Cutting only at assigned edges is what makes the merge safe: the edges
assigned to different vertices are globally distinct, so processing one
cutvertex can never consume an edge that a later cutvertex still needs.
Each step re-checks that invariant and the final cycle is validated from
scratch, so a wrong assembly can never be returned silently.

The path constructor follows the block tree. Endpoints in different blocks
split the graph at a separating cutvertex and concatenate the two half
paths. Endpoints in the same block take a per-block path with a designated
block edge at each cutvertex of the block and splice the hanging component
into that edge; when both endpoints are the block's two cutvertices this
designated edge may not exist at the far end, in which case a path through
an edge between two neighbors of that end is used instead, and the hanging
component is folded in as a cycle opened up between those two neighbors.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .graph import Graph, edge, is_ham_cycle, is_ham_path
from .decomposition import Decomposition, decompose, compute_P0
from .labelling import (Labelling, check_conditions, decide_hamiltonicity,
                        HAMILTONIAN)
from .caterpillars import (ConstructionError, caterpillar_cycle,
                           replace_edge_with)
from .oracle import cycle_with, path_with


@dataclass(frozen=True)
class BlockCycle:
    """A block's cycle plus the distinct block edges assigned per cutvertex."""
    block_index: int
    order: tuple[int, ...]
    assigned: dict

    def edges_at(self, v: int) -> tuple:
        return self.assigned.get(v, ())


def block_cycle(b: Graph, m_values: dict, index: int = -1) -> BlockCycle:
    """Hamiltonian cycle of b**2 with m distinct b-edges at each labelled vertex."""
    demands = tuple((v, c) for v, c in sorted(m_values.items()) if c > 0)
    total = sum(c for _, c in demands)
    cap = 3 if any(c == 2 for _, c in demands) else 4
    if total > cap:
        raise ValueError(f"block demands {demands} exceed cycle capacity")
    w = cycle_with(b.square(), b, demands)
    if w is None:
        raise ConstructionError(
            f"no block cycle satisfying {demands}; the demands were expected "
            "to be feasible for any 2-block")
    assigned = {v: tuple(sorted(es)) for v, es in w.assignment.items()}
    return BlockCycle(index, w.order, assigned)


# -- cycle surgery helpers -------------------------------------------------

def _cycle_has(order, e) -> bool:
    n = len(order)
    return any(edge(order[j], order[(j + 1) % n]) == e for j in range(n))


def _find_cycle(cycles, required_edges):
    hits = [j for j, c in enumerate(cycles)
            if all(_cycle_has(c, e) for e in required_edges)]
    if len(hits) > 1:
        raise ConstructionError(
            f"edges {required_edges} found on several cycles")
    return hits[0] if hits else None


def _cut_at_edge(order, e):
    """The cycle opened at edge e: a path whose two ends are e's endpoints."""
    n = len(order)
    for j in range(n):
        if edge(order[j], order[(j + 1) % n]) == e:
            return order[(j + 1) % n:] + order[:(j + 1) % n] if j + 1 < n \
                else list(order)
    raise ConstructionError(f"edge {e} not on the cycle")


def _extract_vertex(order, v, expect_edges=None):
    """The cycle with v removed: a path between v's former neighbors."""
    j = order.index(v)
    n = len(order)
    removed = {edge(order[j - 1], v), edge(v, order[(j + 1) % n])}
    if expect_edges is not None and removed != set(expect_edges):
        raise ConstructionError(
            f"cycle edges {sorted(removed)} at {v} differ from the assigned "
            f"{sorted(expect_edges)}")
    return order[j + 1:] + order[:j]


def _oriented(path):
    return list(path) if path[0] <= path[-1] else list(reversed(path))


def _anchor_first(path, i):
    if path[0] == i:
        return list(path)
    if path[-1] == i:
        return list(reversed(path))
    raise ConstructionError(f"vertex {i} is not an end of the fragment")


def _assert_cycle(sq: Graph, order) -> None:
    if len(order) != len(set(order)):
        raise ConstructionError("assembled cycle repeats a vertex")
    if len(order) < 3:
        raise ConstructionError("assembled cycle is too short")
    n = len(order)
    for j in range(n):
        a, b = order[j], order[(j + 1) % n]
        if not sq.has_edge(a, b):
            raise ConstructionError(f"assembled cycle uses non-edge ({a}, {b})")


# -- the merge -------------------------------------------------------------

@dataclass
class _Frag:
    kind: str  # "anch" | "open" | "base2" | "leaf"
    path: list
    key: tuple


def _assemble(i: int, frags) -> list:
    base2 = [f for f in frags if f.kind == "base2"]
    anchs = sorted((f for f in frags if f.kind == "anch"), key=lambda f: f.key)
    others = sorted((f for f in frags if f.kind in ("open", "leaf")),
                    key=lambda f: f.key)
    if len(base2) > 1 or (base2 and anchs) or len(anchs) > 2:
        raise ConstructionError(
            f"fragment mix at {i} not realizable: {len(base2)} saturated, "
            f"{len(anchs)} anchored")
    if base2:
        seq = _oriented(base2[0].path)
    elif len(anchs) == 2:
        seq = list(reversed(anchs[0].path)) + anchs[1].path[1:]
    elif len(anchs) == 1:
        seq = list(anchs[0].path)
    else:
        seq = [i]
    for f in others:
        seq.extend(_oriented(f.path))
    return seq


def _merge_cycles(g: Graph, d: Decomposition, labelling: Labelling,
                  sq: Graph) -> list:
    cat = compute_P0(g, d)
    two = d.two_blocks()

    cycles: list[list] = []
    assigned: dict[tuple[int, int], tuple] = {}
    for b in two:
        mv = {i: labelling.value(i, b.index)
              for i in d.cutvertices if i in b.vertices}
        bc = block_cycle(Graph.from_edges(b.edges), mv, b.index)
        cycles.append(list(bc.order))
        for v, es in bc.assigned.items():
            assigned[(v, b.index)] = es

    reserved_end: dict[int, tuple] = {}
    reserved_pair: dict[int, tuple] = {}
    k2_edges: set = set()
    for comp in cat.components:
        if all(g.degree(a) == 1 or g.degree(b) == 1 for a, b in comp.edges):
            continue  # pendant star; its leaves join as singletons later
        if comp.is_trivial:
            u, v = sorted(comp.vertices)
            e = edge(u, v)
            k2_edges.add(e)
            reserved_end[u] = e
            reserved_end[v] = e
            continue
        comp_g = Graph.from_edges(comp.edges)
        need_end = frozenset(v for v in comp.vertices
                             if d.bn.get(v, 0) == 1 and d.k.get(v, 0) >= 1)
        need_pair = frozenset(v for v in comp.vertices
                              if d.bn.get(v, 0) == 2 and d.k.get(v, 0) >= 1)
        cc = caterpillar_cycle(comp_g, need_end, need_pair)
        cycles.append(list(cc.order))
        for v in need_end:
            reserved_end[v] = cc.reserved[v]
        for v in need_pair:
            reserved_pair[v] = cc.reserved[v]

    to_process = sorted(v for v in d.cutvertices if d.k[v] >= 1)
    processed: set = set()
    placed = {v for c in cycles for v in c}

    for i in to_process:
        frags: list[_Frag] = []
        consumed: list[int] = []
        for b in two:
            if i not in b.vertices:
                continue
            es = assigned.get((i, b.index))
            if not es:
                raise ConstructionError(
                    f"cutvertex {i} carries no assigned edges in block {b.index}")
            ci = _find_cycle(cycles, es)
            if ci is None:
                raise ConstructionError(
                    f"assigned edges {es} of vertex {i} vanished before its turn")
            if len(es) == 2:
                path = _extract_vertex(cycles[ci], i, es)
                frags.append(_Frag("open", path, (0, b.index)))
            else:
                path = _anchor_first(_cut_at_edge(cycles[ci], es[0]), i)
                frags.append(_Frag("anch", path, (0, b.index)))
            consumed.append(ci)
        if i in reserved_pair:
            e = reserved_pair[i]
            ci = _find_cycle(cycles, [e])
            if ci is None:
                raise ConstructionError(f"pair edge {e} for {i} vanished")
            path = _cut_at_edge(cycles[ci], e)
            if i not in path or path[0] == i or path[-1] == i:
                raise ConstructionError(f"pair cut at {e} does not keep {i} inside")
            frags.append(_Frag("base2", path, (1, 0)))
            consumed.append(ci)
        elif i in reserved_end:
            e = reserved_end[i]
            ci = _find_cycle(cycles, [e])
            if ci is None:
                if e not in k2_edges:
                    raise ConstructionError(f"end edge {e} for {i} vanished")
                partner = e[0] if e[1] == i else e[1]
                frags.append(_Frag("anch", [i, partner], (1, 0)))
            else:
                path = _anchor_first(_cut_at_edge(cycles[ci], e), i)
                frags.append(_Frag("anch", path, (1, 0)))
                consumed.append(ci)
        for leaf in sorted(g.neighbors(i)):
            if g.degree(leaf) == 1 and leaf not in placed:
                frags.append(_Frag("leaf", [leaf], (2, leaf)))
        if len(set(consumed)) != len(consumed):
            raise ConstructionError(
                f"two fragments at {i} came from one cycle; they should only "
                "meet when {i} itself is merged")

        merged = _assemble(i, frags)
        _assert_cycle(sq, merged)
        cycles = [c for j, c in enumerate(cycles) if j not in consumed]
        cycles.append(merged)
        placed.update(merged)
        processed.add(i)

        _check_pending(cycles, assigned, reserved_end, reserved_pair,
                       k2_edges, processed)

    if len(cycles) != 1:
        raise ConstructionError(
            f"merging finished with {len(cycles)} cycles instead of one")
    return cycles[0]


def _check_pending(cycles, assigned, reserved_end, reserved_pair,
                   k2_edges, processed) -> None:
    """Every edge still owed to an unprocessed cutvertex must remain available."""
    for (j, t), es in assigned.items():
        if j in processed:
            continue
        for e in es:
            if _find_cycle(cycles, [e]) is None:
                raise ConstructionError(
                    f"edge {e} assigned to pending vertex {j} was consumed")
    for j, e in reserved_end.items():
        if j in processed:
            continue
        if e in k2_edges:
            other = e[0] if e[1] == j else e[1]
            if other not in processed:
                continue  # appears once the first endpoint is merged
        if _find_cycle(cycles, [e]) is None:
            raise ConstructionError(
                f"end edge {e} reserved for pending vertex {j} was consumed")
    for j, e in reserved_pair.items():
        if j in processed:
            continue
        if _find_cycle(cycles, [e]) is None:
            raise ConstructionError(
                f"pair edge {e} reserved for pending vertex {j} was consumed")


def construct_ham_cycle(g: Graph, labelling: Labelling | None = None) -> list:
    """A hamiltonian cycle of square(g), built from the labelling's blueprint.

    With labelling None the decision procedure is run first and must come
    back positive. A supplied labelling must satisfy all six conditions.
    """
    if g.n < 3:
        raise ValueError("a hamiltonian cycle needs at least 3 vertices")
    if not g.is_connected():
        raise ValueError("input graph must be connected")
    d = decompose(g)
    if labelling is None:
        verdict = decide_hamiltonicity(g)
        if verdict.outcome != HAMILTONIAN:
            raise ValueError(
                f"decision procedure returned {verdict.outcome}; no labelling "
                "to build from")
        labelling = verdict.labelling
    bad = check_conditions(g, labelling, d)
    if bad:
        raise ValueError(f"labelling violates conditions {bad}")
    sq = g.square()

    if not d.two_blocks():
        cyc = list(caterpillar_cycle(g).order)
    elif len(d.blocks) == 1:
        w = cycle_with(sq, g)
        if w is None:
            raise ConstructionError("no hamiltonian cycle in the block square")
        cyc = list(w.order)
    else:
        old = sys.getrecursionlimit()
        sys.setrecursionlimit(max(old, g.n * 8 + 400))
        try:
            cyc = _merge_cycles(g, d, labelling, sq)
        finally:
            sys.setrecursionlimit(old)

    if not is_ham_cycle(sq, cyc):
        raise ConstructionError("assembled sequence is not a hamiltonian cycle")
    return cyc


# -- hamiltonian paths -----------------------------------------------------

def _separates(g: Graph, v: int, x: int, y: int) -> bool:
    rest = g.subgraph(g.vertices - {v})
    for comp in rest.components():
        if x in comp:
            return y not in comp
    return False


def _splice_path(order: list, c: int, yp: int, tail: list) -> list:
    """Replace the c-yp step of the path by c, tail interior, tail end, yp."""
    if tail[0] != c:
        raise ConstructionError("splice tail must start at the cutvertex")
    for j in range(len(order) - 1):
        a, b = order[j], order[j + 1]
        if (a, b) == (c, yp):
            return order[:j + 1] + tail[1:] + order[j + 1:]
        if (a, b) == (yp, c):
            rt = list(reversed(tail))
            return order[:j + 1] + rt[:-1] + order[j + 1:]
    raise ConstructionError(f"edge ({c}, {yp}) not on the path")


def _partner(e, v):
    return e[0] if e[1] == v else e[1]


def _hanging_component(g: Graph, bg: Graph, c: int) -> Graph:
    """The piece of g attached through c once the block bg is taken out."""
    gm = g.subtract(bg)
    for comp in gm.components():
        if c in comp:
            return gm.subgraph(comp)
    raise ConstructionError(f"no component of the remainder contains {c}")


def _cycle_with_two_edges_at(g2: Graph, c2: int) -> list:
    """Hamiltonian cycle of g2**2 whose two cycle edges at c2 are g2-edges."""
    d2 = decompose(g2)
    frags = []
    for blk in d2.two_blocks():
        if c2 not in blk.vertices:
            continue
        blkg = Graph.from_edges(blk.edges)
        others = [v for v in sorted(d2.cutvertices)
                  if v in blk.vertices and v != c2]
        if len(others) > 1:
            raise ConstructionError(
                f"block {blk.index} has more than two cutvertices")
        yi = others[0] if others else None
        demands = [(c2, 2)] + ([(yi, 1)] if yi is not None else [])
        w = cycle_with(blkg.square(), blkg, demands)
        if w is None:
            raise ConstructionError(
                f"no block cycle with two edges at {c2} in block {blk.index}")
        cyc = list(w.order)
        if yi is not None:
            ypi = _partner(w.assignment[yi][0], yi)
            keep = g2.vertices - (blk.vertices - {yi})
            sub = g2.subgraph(keep)
            hi = None
            for comp in sub.components():
                if yi in comp:
                    hi = sub.subgraph(comp)
                    break
            if hi is None or hi.n < 2:
                raise ConstructionError(f"nothing hangs at cutvertex {yi}")
            di = min(hi.neighbors(yi))
            pi = _path_rec(hi, yi, di)
            cyc = replace_edge_with(cyc, yi, ypi, pi + [ypi], cyclic=True)
        arc = _extract_vertex(cyc, c2, w.assignment[c2])
        frags.append((blk.index, arc))
    frags.sort()
    seq = [c2]
    for _, arc in frags:
        seq.extend(_oriented(arc))
    for leaf in sorted(g2.neighbors(c2)):
        if g2.degree(leaf) == 1:
            seq.append(leaf)
    _assert_cycle(g2.square(), seq)
    if set(seq) != set(g2.vertices):
        raise ConstructionError("cycle through the hanging component is short")
    return seq


def _case_same_block(g: Graph, d: Decomposition, blk, x: int, y: int) -> list:
    bg = Graph.from_edges(blk.edges)
    cvs = sorted(v for v in d.cutvertices if v in blk.vertices)

    if len(cvs) == 1:
        c = cvs[0]
        flip = x == c
        if flip:
            x, y = y, x
        if blk.is_two_block:
            w = path_with(bg.square(), bg, x, y, [(c, 1)])
            if w is None:
                raise ConstructionError(
                    f"no {x}-{y} path with a block edge at {c}")
            pb = list(w.order)
            yp = _partner(w.assignment[c][0], c)
        else:
            if y != c:
                raise ConstructionError("bridge block endpoints are its vertices")
            pb = [x, y]
            yp = x
        rest = _hanging_component(g, bg, c)
        cp = min(rest.neighbors(c))
        pg = _path_rec(rest, c, cp)
        res = _splice_path(pb, c, yp, pg)
        return list(reversed(res)) if flip else res

    if len(cvs) != 2:
        raise ConstructionError(
            f"block carries {len(cvs)} cutvertices; at most two are buildable")
    c1, c2 = cvs
    if not blk.is_two_block:
        raise ConstructionError(
            f"bridge ({c1}, {c2}) joins two cutvertices; no path between its "
            "ends exists in the square")
    if {x, y} == {c1, c2}:
        c1, c2 = x, y
        w = path_with(bg.square(), bg, x, y, [(c1, 1), (c2, 1)])
        if w is None:
            return _rescue_through_neighbors(g, bg, c1, c2, x, y)
    else:
        w = path_with(bg.square(), bg, x, y, [(c1, 1), (c2, 1)])
        if w is None:
            raise ConstructionError(
                f"no {x}-{y} path with block edges at {c1} and {c2}")
    res = list(w.order)
    for c in (c1, c2):
        gi = _hanging_component(g, bg, c)
        cpi = min(gi.neighbors(c))
        pgi = _path_rec(gi, c, cpi)
        zi = _partner(w.assignment[c][0], c)
        res = _splice_path(res, c, zi, pgi)
    return res


def _rescue_through_neighbors(g: Graph, bg: Graph, c1: int, c2: int,
                              x: int, y: int) -> list:
    """x-y path when no block path carries an edge at the far endpoint.

    A path through some edge between two neighbors of c2 exists instead;
    the component hanging at c2 enters between those two neighbors.
    """
    import itertools
    found = None
    for u, v in itertools.combinations(sorted(bg.neighbors(c2)), 2):
        w = path_with(bg.square(), bg, x, y, [(c1, 1)],
                      required_edges=[edge(u, v)])
        if w is not None:
            found = (u, v, w)
            break
    if found is None:
        raise ConstructionError(
            f"neither an edge at {c2} nor a neighbor-pair edge is achievable")
    u, v, w = found
    res = list(w.order)

    g1 = _hanging_component(g, bg, c1)
    cp1 = min(g1.neighbors(c1))
    pg1 = _path_rec(g1, c1, cp1)
    z1 = _partner(w.assignment[c1][0], c1)
    res = _splice_path(res, c1, z1, pg1)

    g2 = _hanging_component(g, bg, c2)
    pos = None
    for j in range(len(res) - 1):
        if edge(res[j], res[j + 1]) == edge(u, v):
            pos = j
            break
    if pos is None:
        raise ConstructionError(f"required edge ({u}, {v}) lost while splicing")
    if g2.n == 2:
        cp2 = min(g2.neighbors(c2))
        insert = [cp2]
    else:
        cyc = _cycle_with_two_edges_at(g2, c2)
        insert = _oriented(_extract_vertex(cyc, c2))
    return res[:pos + 1] + insert + res[pos + 1:]


def _path_rec(g: Graph, x: int, y: int) -> list:
    if g.n == 2:
        return [x, y]
    d = decompose(g)
    same = None
    for blk in d.blocks:
        if x in blk.vertices and y in blk.vertices:
            same = blk
            break
    if same is not None:
        if len(d.blocks) == 1:
            w = path_with(g.square(), g, x, y)
            if w is None:
                raise ConstructionError(f"no {x}-{y} path in the block square")
            return list(w.order)
        return _case_same_block(g, d, same, x, y)

    pg = g.shortest_path(x, y)
    c = None
    for v in pg[1:-1]:
        if v in d.cutvertices and _separates(g, v, x, y):
            c = v
            break
    if c is None:
        raise ConstructionError(
            f"no separating cutvertex between {x} and {y} found")
    rest = g.subgraph(g.vertices - {c})
    kx = None
    for comp in rest.components():
        if x in comp:
            kx = comp
            break
    gx = g.subgraph(kx | {c})
    gy = g.subgraph(g.vertices - kx)
    px = _path_rec(gx, x, c)
    py = _path_rec(gy, c, y)
    return px + py[1:]


def construct_ham_path(g: Graph, x: int, y: int) -> list:
    """A hamiltonian x-y path of square(g).

    Requires the connectedness decision to pass: no nontrivial bridge and
    at most two cutvertices per block.
    """
    from .hamconn import decide_hamiltonian_connectedness, HAM_CONNECTED
    if x == y:
        raise ValueError("endpoints must be distinct")
    if x not in g.vertices or y not in g.vertices:
        raise ValueError("endpoints must be vertices of the graph")
    verdict = decide_hamiltonian_connectedness(g)
    if verdict.outcome != HAM_CONNECTED:
        raise ValueError(
            f"square not guaranteed hamiltonian connected: {verdict.outcome}")
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, g.n * 16 + 400))
    try:
        path = _path_rec(g, x, y)
    finally:
        sys.setrecursionlimit(old)
    sq = g.square()
    if not is_ham_path(sq, path, x, y):
        raise ConstructionError("assembled sequence is not a hamiltonian path")
    return path
