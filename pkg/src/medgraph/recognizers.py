"""Membership tests for the graph classes and structural conditions.

Every recognizer returns a ClassVerdict; a false verdict carries a witness
tuple that the corresponding predicate can re-check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from .errors import EmbeddingUnverified, LabelArity, WrongDistance
from .graph import DistMatrix, Graph
from .metric import Jcirc_set, M_set, interior_interval, interval


@dataclass(frozen=True)
class ClassVerdict:
    name: str
    verdict: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.verdict


@dataclass(frozen=True)
class LabeledEmbedding:
    labels: dict[int, frozenset[int]]
    target: str                 # "hypercube" | "halved_cube" | "johnson"
    k: int | None = None        # Johnson label size


def read_labels(text: str, target: str, k: int | None = None) -> LabeledEmbedding:
    """Parse lines `vertex: i1,i2,...` into a LabeledEmbedding."""
    from .errors import ParseError
    labels: dict[int, frozenset[int]] = {}
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        if ":" not in ln:
            raise ParseError(f"bad labels line {ln!r}")
        head, tail = ln.split(":", 1)
        try:
            v = int(head)
            items = frozenset(int(t) for t in tail.replace(",", " ").split())
        except ValueError as exc:
            raise ParseError(f"bad labels line {ln!r}") from exc
        labels[v] = items
    return LabeledEmbedding(labels, target, k=k)


def write_labels(e: LabeledEmbedding) -> str:
    lines = [f"{v}: {','.join(str(i) for i in sorted(e.labels[v]))}"
             for v in sorted(e.labels)]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- meshedness

def is_meshed(g: Graph, d: DistMatrix) -> ClassVerdict:
    """For d(v,w)=2, some common neighbor x of v,w has 2d(u,x) <= d(u,v)+d(u,w)."""
    for v in range(g.n):
        for w in range(v + 1, g.n):
            if d(v, w) != 2:
                continue
            common = [x for x in g.adj[v] if x in g.adj_sets[w]]
            for u in range(g.n):
                bound = d(u, v) + d(u, w)
                if not any(2 * d(u, x) <= bound for x in common):
                    return ClassVerdict("meshed", False, (u, v, w))
    return ClassVerdict("meshed", True)


# ------------------------------------------------------------ weak modularity

def _triangle_condition(g: Graph, d: DistMatrix):
    for u in range(g.n):
        for v, w in g.edges():
            if d(u, v) == d(u, w) > 1:
                k = d(u, v)
                if not any(x in g.adj_sets[w] and d(u, x) == k - 1
                           for x in g.adj[v]):
                    return ("TC", u, v, w)
    return None


def _quadrangle_condition(g: Graph, d: DistMatrix):
    for u in range(g.n):
        for z in range(g.n):
            for v, w in itertools.combinations(g.adj[z], 2):
                if d(v, w) == 2 and 2 <= d(u, v) == d(u, w) == d(u, z) - 1:
                    k = d(u, v)
                    if not any(x in g.adj_sets[w] and d(u, x) == k - 1
                               for x in g.adj[v]):
                        return ("QC", u, v, w, z)
    return None


def is_weakly_modular(g: Graph, d: DistMatrix) -> ClassVerdict:
    bad = _triangle_condition(g, d) or _quadrangle_condition(g, d)
    return ClassVerdict("weakly_modular", bad is None, bad)


def is_modular(g: Graph, d: DistMatrix) -> ClassVerdict:
    """Every triple has a vertex in all three pairwise intervals."""
    for u, v, w in itertools.combinations(range(g.n), 3):
        if not any(d(u, m) + d(m, v) == d(u, v)
                   and d(v, m) + d(m, w) == d(v, w)
                   and d(u, m) + d(m, w) == d(u, w)
                   for m in range(g.n)):
            return ClassVerdict("modular", False, (u, v, w))
    return ClassVerdict("modular", True)


# ------------------------------------------------------------------ chordality

def _mcs_order(g: Graph) -> list[int]:
    order, weight, used = [], [0] * g.n, [False] * g.n
    for _ in range(g.n):
        v = max((x for x in range(g.n) if not used[x]),
                key=lambda x: (weight[x], -x))
        used[v] = True
        order.append(v)
        for y in g.adj[v]:
            if not used[y]:
                weight[y] += 1
    return order


def _chordless_cycle(g: Graph) -> tuple | None:
    """An induced cycle of length >= 4, found through a nonadjacent
    neighbor pair of some vertex and a shortest path avoiding that
    vertex's other neighbors."""
    for v in range(g.n):
        for w, x in itertools.combinations(g.adj[v], 2):
            if x in g.adj_sets[w]:
                continue
            banned = (g.adj_sets[v] | {v}) - {w, x}
            path = _shortest_path_avoiding(g, w, x, banned)
            if path is not None:
                return tuple([v] + path)
    return None


def _shortest_path_avoiding(g: Graph, s: int, t: int, banned) -> list | None:
    prev = {s: None}
    queue = [s]
    while queue:
        nxt = []
        for a in queue:
            for b in g.adj[a]:
                if b not in prev and b not in banned:
                    prev[b] = a
                    if b == t:
                        path = [t]
                        while prev[path[-1]] is not None:
                            path.append(prev[path[-1]])
                        return path[::-1]
                    nxt.append(b)
        queue = nxt
    return None


def is_chordal(g: Graph) -> ClassVerdict:
    """Maximum-cardinality search plus elimination-ordering verification."""
    order = _mcs_order(g)
    pos = {v: i for i, v in enumerate(order)}
    ok = True
    for v in order:
        earlier = [x for x in g.adj[v] if pos[x] < pos[v]]
        if len(earlier) > 1:
            last = max(earlier, key=pos.get)
            if any(x != last and x not in g.adj_sets[last] for x in earlier):
                ok = False
                break
    if ok:
        return ClassVerdict("chordal", True)
    return ClassVerdict("chordal", False, _chordless_cycle(g))


def find_induced_c4(g: Graph, d: DistMatrix) -> tuple | None:
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if d(u, v) != 2:
                continue
            common = [x for x in g.adj[u] if x in g.adj_sets[v]]
            for a, b in itertools.combinations(common, 2):
                if b not in g.adj_sets[a]:
                    return (u, a, v, b)
    return None


def find_induced_c5(g: Graph) -> tuple | None:
    for a, b in g.edges():
        for c in g.adj[b]:
            if c == a or c in g.adj_sets[a]:
                continue
            for e in g.adj[a]:
                if e in (b, c) or e in g.adj_sets[b] or e in g.adj_sets[c]:
                    continue
                for x in g.adj[c]:
                    if (x in g.adj_sets[e] and x not in (a, b)
                            and x not in g.adj_sets[a] and x not in g.adj_sets[b]):
                        return (a, b, c, x, e)
    return None


def is_weakly_bridged(g: Graph, d: DistMatrix) -> ClassVerdict:
    wm = is_weakly_modular(g, d)
    if not wm:
        return ClassVerdict("weakly_bridged", False, wm.witness)
    c4 = find_induced_c4(g, d)
    return ClassVerdict("weakly_bridged", c4 is None, c4)


def is_bridged(g: Graph, d: DistMatrix) -> ClassVerdict:
    wb = is_weakly_bridged(g, d)
    if not wb:
        return ClassVerdict("bridged", False, wb.witness)
    c5 = find_induced_c5(g)
    return ClassVerdict("bridged", c5 is None, c5)


# ------------------------------------------------------------- convex balls

def eccentricity(g: Graph, d: DistMatrix, v: int) -> int:
    return max(d(v, x) for x in range(g.n))


def has_convex_balls(g: Graph, d: DistMatrix) -> ClassVerdict:
    for v in range(g.n):
        for r in range(1, eccentricity(g, d, v) + 1):
            ball = [x for x in range(g.n) if d(v, x) <= r]
            inside = set(ball)
            for x, y in itertools.combinations(ball, 2):
                for z in interval(g, d, x, y):
                    if z not in inside:
                        return ClassVerdict("convex_balls", False, (v, r, x, y, z))
    return ClassVerdict("convex_balls", True)


def satisfies_INC(g: Graph, d: DistMatrix) -> ClassVerdict:
    """Neighbors of u inside I(u,v) are pairwise adjacent."""
    for u in range(g.n):
        for v in range(g.n):
            if u == v or g.has_edge(u, v):
                continue
            near = [x for x in g.adj[u] if d(u, x) + d(x, v) == d(u, v)]
            for a, b in itertools.combinations(near, 2):
                if b not in g.adj_sets[a]:
                    return ClassVerdict("INC", False, (u, v, a, b))
    return ClassVerdict("INC", True)


def satisfies_TPC(g: Graph, d: DistMatrix) -> ClassVerdict:
    """Edges equidistant from v close into a triangle one step closer, or
    cap an induced pentagon two steps closer."""
    for v in range(g.n):
        for x, y in g.edges():
            k = d(v, x)
            if k < 2 or d(v, y) != k:
                continue
            if any(z in g.adj_sets[y] and d(v, z) == k - 1 for z in g.adj[x]):
                continue
            if _pentagon_cap(g, d, v, x, y, k):
                continue
            return ClassVerdict("TPC", False, (v, x, y))
    return ClassVerdict("TPC", True)


def _pentagon_cap(g: Graph, d: DistMatrix, v, x, y, k) -> bool:
    for w in g.adj[x]:
        if w == y or w in g.adj_sets[y]:
            continue
        for z in g.adj[w]:
            if d(v, z) != k - 2 or z in g.adj_sets[x] or z in g.adj_sets[y]:
                continue
            for wp in g.adj[y]:
                if (wp in g.adj_sets[z] and wp != w and wp not in g.adj_sets[w]
                        and wp not in g.adj_sets[x] and wp != x and wp != z):
                    return True
    return False


# ------------------------------------------ basis-graph style conditions

def induced_squares(g: Graph, d: DistMatrix):
    """Induced 4-cycles (v1, v2, v3, v4) with v1 < v3 and v2 < v4."""
    for v1 in range(g.n):
        for v3 in range(v1 + 1, g.n):
            if d(v1, v3) != 2:
                continue
            common = [x for x in g.adj[v1] if x in g.adj_sets[v3]]
            for v2, v4 in itertools.combinations(common, 2):
                if v4 not in g.adj_sets[v2]:
                    yield (v1, v2, v3, v4)


def satisfies_PC(g: Graph, d: DistMatrix) -> ClassVerdict:
    """d(u,v1)+d(u,v3) = d(u,v2)+d(u,v4) on every induced square."""
    for sq in induced_squares(g, d):
        v1, v2, v3, v4 = sq
        for u in range(g.n):
            if d(u, v1) + d(u, v3) != d(u, v2) + d(u, v4):
                return ClassVerdict("PC", False, (u,) + sq)
    return ClassVerdict("PC", True)


def satisfies_ICm(g: Graph, d: DistMatrix, m: int) -> ClassVerdict:
    """Every 2-interval embeds induced into the m-hyperoctahedron: its
    complement must be a matching plus isolated vertices, with at most m
    pairs consumed overall."""
    if m not in (3, 4):
        raise ValueError("m must be 3 or 4")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if d(u, v) != 2:
                continue
            verts = sorted(interval(g, d, u, v))
            comp_deg = {x: 0 for x in verts}
            comp_edges = 0
            for a, b in itertools.combinations(verts, 2):
                if b not in g.adj_sets[a]:
                    comp_deg[a] += 1
                    comp_deg[b] += 1
                    comp_edges += 1
            if any(deg > 1 for deg in comp_deg.values()):
                return ClassVerdict(f"IC{m}", False, (u, v))
            isolated = sum(1 for deg in comp_deg.values() if deg == 0)
            if comp_edges + isolated > m:
                return ClassVerdict(f"IC{m}", False, (u, v))
    return ClassVerdict(f"IC{m}", True)


def is_thick(g: Graph, d: DistMatrix) -> ClassVerdict:
    """Every distance-2 pair lies in an induced square."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if d(u, v) != 2:
                continue
            common = [x for x in g.adj[u] if x in g.adj_sets[v]]
            if not any(b not in g.adj_sets[a]
                       for a, b in itertools.combinations(common, 2)):
                return ClassVerdict("thick", False, (u, v))
    return ClassVerdict("thick", True)


# ------------------------------------------------ 3/4-interval conditions

def check_condition_a(g: Graph, d: DistMatrix, u: int, v: int) -> bool:
    """3-interval: some x ~ u, y ~ v inside the interior with x adjacent to
    all of I(u,v) n N(v) except y, and symmetrically for y."""
    if d(u, v) != 3:
        raise WrongDistance(f"condition (a) needs d(u,v)=3, got {d(u, v)}")
    inner = interior_interval(g, d, u, v)
    near_u = [z for z in g.adj[u] if z in inner]
    near_v = [z for z in g.adj[v] if z in inner]
    for x in near_u:
        for y in near_v:
            if all(z == y or z in g.adj_sets[x] for z in near_v) and \
               all(z == x or z in g.adj_sets[y] for z in near_u):
                return True
    return False


def check_condition_b(g: Graph, d: DistMatrix, u: int, v: int) -> bool:
    """4-interval: middle-level x adjacent to all of I n N(u), middle-level
    y adjacent to all of I n N(v); x and y may coincide."""
    if d(u, v) != 4:
        raise WrongDistance(f"condition (b) needs d(u,v)=4, got {d(u, v)}")
    inner = interior_interval(g, d, u, v)
    mid = [z for z in inner if d(u, z) == 2]
    near_u = [z for z in g.adj[u] if z in inner]
    near_v = [z for z in g.adj[v] if z in inner]
    got_x = any(all(z in g.adj_sets[x] for z in near_u) for x in mid)
    got_y = any(all(z in g.adj_sets[y] for z in near_v) for y in mid)
    return got_x and got_y


def check_condition_c(g: Graph, d: DistMatrix, u: int, v: int) -> bool:
    """4-interval: x ~ u and y ~ v in the interior, both adjacent to every
    interior vertex equidistant (2,2) from the ends."""
    if d(u, v) != 4:
        raise WrongDistance(f"condition (c) needs d(u,v)=4, got {d(u, v)}")
    inner = interior_interval(g, d, u, v)
    mid = [z for z in inner if d(u, z) == 2 and d(v, z) == 2]
    for x in (z for z in g.adj[u] if z in inner):
        if not all(z in g.adj_sets[x] for z in mid):
            continue
        for y in (z for z in g.adj[v] if z in inner):
            if all(z in g.adj_sets[y] for z in mid):
                return True
    return False


# ------------------------------------------------ bipartite absolute retracts

def is_bipartite(g: Graph) -> tuple[bool, list[int] | None]:
    color = [-1] * g.n
    color[0] = 0
    queue = [0]
    while queue:
        nxt = []
        for a in queue:
            for b in g.adj[a]:
                if color[b] == -1:
                    color[b] = 1 - color[a]
                    nxt.append(b)
                elif color[b] == color[a]:
                    return False, None
        queue = nxt
    return True, color


def is_bipartite_absolute_retract(g: Graph, d: DistMatrix) -> ClassVerdict:
    """Bipartite + interval condition: for d(u,v) >= 3 the neighbors of v
    inside I(u,v) have a second common neighbor in I(u,v)."""
    bip, _ = is_bipartite(g)
    if not bip:
        return ClassVerdict("bipartite_absolute_retract", False, ("not_bipartite",))
    for u in range(g.n):
        for v in range(g.n):
            if d(u, v) < 3:
                continue
            iv = interval(g, d, u, v)
            near_v = [z for z in g.adj[v] if z in iv]
            if not any(x != v and all(z in g.adj_sets[x] for z in near_v)
                       for x in iv):
                return ClassVerdict("bipartite_absolute_retract", False, (u, v))
    return ClassVerdict("bipartite_absolute_retract", True)


def _bn_graph(n: int) -> nx.Graph:
    """K_{n,n} minus a perfect matching, sides 0..n-1 and n..2n-1."""
    h = nx.Graph()
    h.add_nodes_from(range(2 * n))
    h.add_edges_from((i, n + j) for i in range(n) for j in range(n) if i != j)
    return h


def absolute_retract_by_extension(g: Graph, d: DistMatrix,
                                  max_n: int = 5) -> ClassVerdict:
    """Modularity plus: every induced copy of K_{n,n} minus a perfect
    matching (4 <= n <= max_n) extends by two adjacent vertices, one
    dominating each side."""
    mod = is_modular(g, d)
    if not mod:
        return ClassVerdict("absolute_retract_extension", False, mod.witness)
    gn = nx.Graph()
    gn.add_nodes_from(range(g.n))
    gn.add_edges_from(g.edges())
    for n in range(4, max_n + 1):
        if 2 * n > g.n:
            break
        pattern = _bn_graph(n)
        matcher = nx.algorithms.isomorphism.GraphMatcher(gn, pattern)
        seen = set()
        for mapping in matcher.subgraph_isomorphisms_iter():
            inv = {pat: host for host, pat in mapping.items()}
            a_side = frozenset(inv[i] for i in range(n))
            b_side = frozenset(inv[n + i] for i in range(n))
            key = frozenset((a_side, b_side))
            if key in seen:
                continue
            seen.add(key)
            if not _bn_extends(g, a_side, b_side):
                return ClassVerdict("absolute_retract_extension", False,
                                    tuple(sorted(a_side | b_side)))
    return ClassVerdict("absolute_retract_extension", True)


def _bn_extends(g: Graph, a_side, b_side) -> bool:
    doms_b = [x for x in range(g.n)
              if x not in a_side | b_side and b_side <= g.adj_sets[x]]
    doms_a = [y for y in range(g.n)
              if y not in a_side | b_side and a_side <= g.adj_sets[y]]
    return any(y in g.adj_sets[x] for x in doms_b for y in doms_a)


# ------------------------------------------------ alpha/beta configurations

def _small_clique_interiors(g: Graph, d: DistMatrix):
    """Distance-2 pairs whose interval interior is 2-3 pairwise adjacent
    vertices (hence the pair lies in no induced square)."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if d(u, v) != 2:
                continue
            inner = sorted(interior_interval(g, d, u, v))
            if 2 <= len(inner) <= 3 and all(
                    b in g.adj_sets[a]
                    for a, b in itertools.combinations(inner, 2)):
                yield u, v, inner


def personal_neighbor(g: Graph, s_set, x: int) -> int | None:
    """The unique neighbor of x inside s_set, if there is exactly one."""
    hits = [s for s in s_set if s in g.adj_sets[x]]
    return hits[0] if len(hits) == 1 else None


def detect_beta_configuration(g: Graph, d: DistMatrix):
    """Witness (u, v, (s,t,w), (a,b,c)) where each interior vertex is the
    personal neighbor of some vertex outside the equidistant part."""
    for u, v, inner in _small_clique_interiors(g, d):
        if len(inner) != 3:
            continue
        jc = sorted(Jcirc_set(g, d, u, v))
        owners = {}
        for x in jc:
            pn = personal_neighbor(g, inner, x)
            if pn is not None and pn not in owners:
                owners[pn] = x
        if len(owners) == 3:
            return (u, v, tuple(inner), tuple(owners[s] for s in inner))
    return None


def _alpha_apex(g, d, u, v, inner, far, near2) -> int | None:
    """Vertex a with d(a,u)=d(a,v)=2, d(a,far)=3 and d(a,s)=2 for the
    other interior vertices."""
    for a in range(g.n):
        if d(a, u) == 2 and d(a, v) == 2 and d(a, far) == 3 and \
                all(d(a, s) == 2 for s in near2):
            return a
    return None


def detect_alpha_configuration(g: Graph, d: DistMatrix):
    """(type, witness) for the first matching configuration, or None."""
    for u, v, inner in _small_clique_interiors(g, d):
        for finder in (_alpha_type1, _alpha_type2, _alpha_type3):
            found = finder(g, d, u, v, inner)
            if found is not None:
                return found
    return None


def _alpha_type1(g, d, u, v, inner):
    for t in inner:
        rest = [s for s in inner if s != t]
        a = _alpha_apex(g, d, u, v, inner, t, rest)
        if a is None:
            continue
        for b in range(g.n):
            if b in inner or b in (u, v):
                continue
            if t in g.adj_sets[b] and all(s not in g.adj_sets[b] for s in rest) \
                    and (u in g.adj_sets[b] or v in g.adj_sets[b]):
                return (1, (u, v, tuple(inner), t, a, b))
    return None


def _alpha_type2(g, d, u, v, inner):
    if len(inner) != 3:
        return None
    for s, t, w in itertools.permutations(inner):
        a1 = _alpha_apex(g, d, u, v, inner, t, [s, w])
        a2 = _alpha_apex(g, d, u, v, inner, w, [s, t])
        if a1 is None or a2 is None:
            continue
        for b in range(g.n):
            if b in inner or b in (u, v):
                continue
            if t in g.adj_sets[b] and w in g.adj_sets[b] \
                    and s not in g.adj_sets[b] \
                    and (u in g.adj_sets[b] or v in g.adj_sets[b]):
                return (2, (u, v, (s, t, w), a1, a2, b))
    return None


def _alpha_type3(g, d, u, v, inner):
    if len(inner) != 3:
        return None
    for s, t, w in itertools.permutations(inner):
        a1 = _alpha_apex(g, d, u, v, inner, t, [s, w])
        a2 = _alpha_apex(g, d, u, v, inner, w, [s, t])
        a3 = _alpha_apex(g, d, u, v, inner, s, [t, w])
        if a1 is not None and a2 is not None and a3 is not None:
            return (3, (u, v, (s, t, w), a1, a2, a3))
    return None


# ------------------------------------------------------- labeled embeddings

def verify_labeled_embedding(g: Graph, d: DistMatrix,
                             e: LabeledEmbedding) -> ClassVerdict:
    for v in range(g.n):
        if v not in e.labels:
            raise LabelArity(f"vertex {v} has no label")
    if e.target == "halved_cube":
        for v, lab in e.labels.items():
            if len(lab) % 2:
                raise LabelArity(f"label of {v} has odd size {len(lab)}")
    elif e.target == "johnson":
        if e.k is None:
            raise LabelArity("johnson target needs the label size k")
        for v, lab in e.labels.items():
            if len(lab) != e.k:
                raise LabelArity(f"label of {v} has size {len(lab)} != {e.k}")
    elif e.target != "hypercube":
        raise LabelArity(f"unknown target {e.target!r}")
    scale = 1 if e.target == "hypercube" else 2
    for u in range(g.n):
        for v in range(u + 1, g.n):
            diff = len(e.labels[u] ^ e.labels[v])
            if diff != scale * d(u, v):
                return ClassVerdict("labeled_embedding", False, (u, v))
    return ClassVerdict("labeled_embedding", True)


def connected_medians_partial_johnson(g: Graph, d: DistMatrix,
                                      e: LabeledEmbedding | None = None) -> ClassVerdict:
    if e is not None:
        ver = verify_labeled_embedding(g, d, e)
        if not ver:
            raise EmbeddingUnverified(f"embedding fails at pair {ver.witness}")
    m = is_meshed(g, d)
    return ClassVerdict("connected_medians_partial_johnson", m.verdict, m.witness)


def connected_medians_partial_halved_cube(g: Graph, d: DistMatrix,
                                          e: LabeledEmbedding | None = None) -> ClassVerdict:
    if e is not None:
        ver = verify_labeled_embedding(g, d, e)
        if not ver:
            raise EmbeddingUnverified(f"embedding fails at pair {ver.witness}")
    name = "connected_medians_partial_halved_cube"
    m = is_meshed(g, d)
    if not m:
        return ClassVerdict(name, False, m.witness)
    beta = detect_beta_configuration(g, d)
    if beta is not None:
        return ClassVerdict(name, False, ("beta",) + beta)
    if is_weakly_modular(g, d):
        # for weakly modular partial halved-cubes the beta test suffices
        return ClassVerdict(name, True)
    alpha = detect_alpha_configuration(g, d)
    if alpha is not None:
        return ClassVerdict(name, False, ("alpha",) + alpha)
    return ClassVerdict(name, True)
