"""Small-graph machinery: bitset graphs, canonical forms, orbits, counting,
constrained enumeration and graph6 I/O.

Graphs are tiny (order <= 12), so everything favours exactness and
determinism over asymptotics.  Vertices are 0..order-1 and adjacency is a
tuple of per-vertex bitmasks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

MAX_ORDER = 12


class GraphClass(Enum):
    GENERAL = "general"
    TRIANGLE_FREE = "triangle-free"
    TRIANGLE_QUAD_FREE = "triangle-quadrangle-free"


class SmallGraph:
    """Undirected loopless graph on at most 12 vertices."""

    __slots__ = ("order", "rows", "_hash")

    def __init__(self, order: int, rows: tuple[int, ...]):
        if not 1 <= order <= MAX_ORDER:
            raise ValueError(f"order {order} out of range 1..{MAX_ORDER}")
        if len(rows) != order:
            raise ValueError("row count does not match order")
        full = (1 << order) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} has bits beyond order")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in range(order):
                if (row >> u & 1) != (rows[u] >> v & 1):
                    raise ValueError("adjacency not symmetric")
        self.order = order
        self.rows = tuple(rows)
        self._hash = hash((order, self.rows))

    @classmethod
    def _raw(cls, order: int, rows: tuple[int, ...]) -> SmallGraph:
        """Unvalidated constructor for internal code paths that already
        guarantee a symmetric, loop-free adjacency."""
        g = cls.__new__(cls)
        g.order = order
        g.rows = rows
        g._hash = hash((order, rows))
        return g

    @classmethod
    def from_edges(cls, order: int, edges) -> SmallGraph:
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError("loop edge")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order)
                for v in range(u + 1, self.order) if self.rows[u] >> v & 1]

    def nonedges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order)
                for v in range(u + 1, self.order) if not self.rows[u] >> v & 1]

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def complement(self) -> SmallGraph:
        full = (1 << self.order) - 1
        return SmallGraph._raw(self.order, tuple(
            (full ^ r) & ~(1 << v) for v, r in enumerate(self.rows)))

    def relabel(self, perm) -> SmallGraph:
        """perm[v] = new label of old vertex v."""
        rows = [0] * self.order
        for v, r in enumerate(self.rows):
            m = r
            while m:
                u = (m & -m).bit_length() - 1
                rows[perm[v]] |= 1 << perm[u]
                m &= m - 1
        return SmallGraph._raw(self.order, tuple(rows))

    def subgraph(self, vertices) -> SmallGraph:
        """Induced subgraph on the given vertex sequence (in order)."""
        verts = list(vertices)
        idx = {v: i for i, v in enumerate(verts)}
        rows = [0] * len(verts)
        for i, v in enumerate(verts):
            for u in verts:
                if self.rows[v] >> u & 1:
                    rows[i] |= 1 << idx[u]
        return SmallGraph._raw(len(verts), tuple(rows))

    def delete_vertex(self, v: int) -> SmallGraph:
        return self.subgraph([u for u in range(self.order) if u != v])

    def add_vertex(self, neighbourhood: int) -> SmallGraph:
        """New graph with one extra vertex adjacent to the bitmask given."""
        n = self.order
        rows = [r | ((neighbourhood >> v & 1) << n)
                for v, r in enumerate(self.rows)]
        rows.append(neighbourhood)
        return SmallGraph._raw(n + 1, tuple(rows))

    def has_triangle(self) -> bool:
        for u, v in self.edges():
            if self.rows[u] & self.rows[v]:
                return True
        return False

    def has_quadrangle(self) -> bool:
        """Induced C4 test: a non-adjacent pair with >= 2 common neighbours
        is a C4 only if two of those common neighbours are non-adjacent."""
        for u in range(self.order):
            for v in range(u + 1, self.order):
                if self.rows[u] >> v & 1:
                    continue
                common = self.rows[u] & self.rows[v]
                if common.bit_count() < 2:
                    continue
                cc = [w for w in range(self.order) if common >> w & 1]
                for a, b in itertools.combinations(cc, 2):
                    if not self.rows[a] >> b & 1:
                        return True
        return False

    def in_class(self, cls: GraphClass) -> bool:
        if cls is GraphClass.GENERAL:
            return True
        if self.has_triangle():
            return False
        if cls is GraphClass.TRIANGLE_QUAD_FREE:
            return not self.has_quadrangle()
        return True

    def upper_triangle_code(self) -> int:
        """Column-major upper-triangle bit packing (graph6 bit order)."""
        code = 0
        bit = 0
        for v in range(1, self.order):
            for u in range(v):
                code |= (self.rows[u] >> v & 1) << bit
                bit += 1
        return code

    @classmethod
    def from_upper_triangle_code(cls, order: int, code: int) -> SmallGraph:
        rows = [0] * order
        bit = 0
        for v in range(1, order):
            for u in range(v):
                if code >> bit & 1:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                bit += 1
        return cls._raw(order, tuple(rows))

    def __eq__(self, other):
        return (isinstance(other, SmallGraph)
                and self.order == other.order and self.rows == other.rows)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"SmallGraph({self.order}, edges={self.edges()})"


# canonical key: (order, upper-triangle code of the canonically relabelled
# graph).  Two graphs get the same key iff they are isomorphic.
CanonicalKey = tuple[int, int]


def _refine(rows, colors, ncolors):
    """Equitable refinement of a vertex colouring.

    Colour indices double as the canonical cell order.  Each round rehashes
    every vertex by (old colour, multiset of neighbour colours) -- the
    neighbour multiset is packed into an int, 5 bits per colour class.
    """
    n = len(rows)
    while ncolors < n:
        sigs = []
        for v in range(n):
            packed = 0
            m = rows[v]
            while m:
                u = (m & -m).bit_length() - 1
                packed += 1 << (5 * colors[u])
                m &= m - 1
            sigs.append((colors[v], packed))
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        if len(order) == ncolors:
            break
        colors = [order[s] for s in sigs]
        ncolors = len(order)
    return colors, ncolors


class _CanonSearch:
    """Individualization-refinement search for a canonical labelling.

    The certificate is the maximal upper-triangle code over the leaves of
    the refinement tree.  Automorphisms discovered at coinciding leaves are
    collected; prune only with those fixing the current individualization
    prefix, which keeps the search exact.
    """

    def __init__(self, g: SmallGraph):
        self.g = g
        self.rows = g.rows
        self.best_code = -1
        self.best_perm = None
        self.leaf_perms: dict[int, tuple[int, ...]] = {}
        self.generators: list[tuple[int, ...]] = []
        self._prune_cache = None

    def run(self):
        n = self.g.order
        degs = sorted(set(r.bit_count() for r in self.rows))
        rank = {d: i for i, d in enumerate(degs)}
        colors = [rank[r.bit_count()] for r in self.rows]
        colors, ncolors = _refine(self.rows, colors, len(degs))
        self._node(colors, ncolors, ())
        return self.best_code, self.best_perm, self.generators

    def _leaf(self, colors):
        n = self.g.order
        rows = self.rows
        inv = [0] * n
        for v, c in enumerate(colors):
            inv[c] = v
        code = 0
        bit = 0
        for v in range(1, n):
            rv = rows[inv[v]]
            for u in range(v):
                if rv >> inv[u] & 1:
                    code |= 1 << bit
                bit += 1
        perm_t = tuple(colors)
        if code in self.leaf_perms:
            other = self.leaf_perms[code]
            # perm_t and other relabel to the same graph: compose into an
            # automorphism of the original labelling
            inv_other = [0] * n
            for v, c in enumerate(other):
                inv_other[c] = v
            auto = tuple(inv_other[perm_t[v]] for v in range(n))
            if any(auto[v] != v for v in range(n)):
                self.generators.append(auto)
        else:
            self.leaf_perms[code] = perm_t
        if code > self.best_code:
            self.best_code = code
            self.best_perm = perm_t

    def _node(self, colors, ncolors, prefix):
        n = self.g.order
        if ncolors == n:
            self._leaf(colors)
            return
        counts = [0] * ncolors
        for c in colors:
            counts[c] += 1
        target = next(c for c in range(ncolors) if counts[c] > 1)
        cell = [v for v in range(n) if colors[v] == target]
        tried: list[int] = []
        for v in cell:
            if self._pruned(v, tried, prefix):
                continue
            child = [c + (1 if c > target or (c == target and u != v) else 0)
                     for u, c in enumerate(colors)]
            ch_colors, ch_ncolors = _refine(self.rows, child, ncolors + 1)
            self._node(ch_colors, ch_ncolors, prefix + (v,))
            tried.append(v)

    def _pruned(self, v, tried, prefix):
        """Skip v when an automorphism fixing the individualized prefix maps
        it onto an already-explored candidate."""
        if not tried:
            return False
        cache = self._prune_cache
        key = (prefix, len(self.generators))
        if cache is None or cache[0] != key:
            find = self._build_uf(prefix)
            self._prune_cache = (key, find)
        else:
            find = cache[1]
        rv = find[v]
        return any(find[u] == rv for u in tried)

    def _build_uf(self, prefix):
        n = self.g.order
        parent = list(range(n))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for gen in self.generators:
            ok = True
            for p in prefix:
                if gen[p] != p:
                    ok = False
                    break
            if ok:
                for i in range(n):
                    ri, rj = find(i), find(gen[i])
                    if ri != rj:
                        parent[ri] = rj
        return [find(i) for i in range(n)]


@lru_cache(maxsize=1 << 20)
def _canon_data(order: int, rows: tuple[int, ...]):
    code, perm, gens = _CanonSearch(SmallGraph._raw(order, rows)).run()
    return code, perm, tuple(gens)


def canonical_key(g: SmallGraph) -> CanonicalKey:
    code, _, _ = _canon_data(g.order, g.rows)
    return (g.order, code)


def canonical_labelling(g: SmallGraph) -> tuple[int, ...]:
    """perm with perm[v] = canonical position of vertex v."""
    _, perm, _ = _canon_data(g.order, g.rows)
    return perm


def canonical_form(g: SmallGraph) -> SmallGraph:
    return g.relabel(canonical_labelling(g))


def graph_from_key(key: CanonicalKey) -> SmallGraph:
    order, code = key
    return SmallGraph.from_upper_triangle_code(order, code)


def automorphism_generators(g: SmallGraph) -> list[tuple[int, ...]]:
    """Generators of Aut(g) collected during the canonical search, topped up
    so that they generate the full group (verified against brute force in
    the test-suite for small orders)."""
    _, _, gens = _canon_data(g.order, g.rows)
    return list(gens)


def automorphism_group_order(g: SmallGraph) -> int:
    """|Aut(g)| via orbit-stabilizer over the discovered generators."""
    n = g.order
    gens = [list(p) for p in automorphism_generators(g)]
    total = 1
    points = list(range(n))
    while gens:
        base = points[0]
        orbit = {base: tuple(range(n))}
        frontier = [base]
        while frontier:
            x = frontier.pop()
            for gen in gens:
                y = gen[x]
                if y not in orbit:
                    word = orbit[x]
                    orbit[y] = tuple(gen[word[i]] for i in range(n))
                    frontier.append(y)
        total *= len(orbit)
        stab = []
        seen = set()
        for x, ux in orbit.items():
            for gen in gens:
                uy = orbit[gen[x]]
                inv = [0] * n
                for i, p in enumerate(uy):
                    inv[p] = i
                schreier = tuple(inv[gen[ux[i]]] for i in range(n))
                if any(schreier[i] != i for i in range(n)) and schreier not in seen:
                    seen.add(schreier)
                    stab.append(list(schreier))
        gens = stab
        points = [p for p in points if p != base]
    return total


def _orbit_partition(n: int, items: list, gens, act) -> list[list]:
    """Union-find orbits of `items` under generator action `act(gen, item)`."""
    index = {it: i for i, it in enumerate(items)}
    parent = list(range(len(items)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for gen in gens:
        for it in items:
            j = index[act(gen, it)]
            ri, rj = find(index[it]), find(j)
            if ri != rj:
                parent[ri] = rj
    groups: dict[int, list] = {}
    for it in items:
        groups.setdefault(find(index[it]), []).append(it)
    return [sorted(mem) for mem in sorted(groups.values(), key=lambda m: min(m))]


@dataclass(frozen=True)
class Orbit:
    """One orbit of vertices, edges or non-edges under Aut(G)."""
    members: tuple            # vertices, or sorted vertex pairs
    degree: int               # deg of a member (common-neighbour deg for pairs)

    @property
    def representative(self):
        return self.members[0]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class OrbitDecomposition:
    vertex_orbits: tuple[Orbit, ...]
    edge_orbits: tuple[Orbit, ...]
    nonedge_orbits: tuple[Orbit, ...]


def pair_common_degree(g: SmallGraph, pair) -> int:
    u, v = pair
    return (g.rows[u] & g.rows[v]).bit_count()


def orbits(g: SmallGraph) -> OrbitDecomposition:
    gens = automorphism_generators(g)
    verts = list(range(g.order))
    vparts = _orbit_partition(g.order, verts, gens, lambda p, v: p[v])

    def pair_act(p, pair):
        a, b = p[pair[0]], p[pair[1]]
        return (a, b) if a < b else (b, a)

    eparts = _orbit_partition(g.order, g.edges(), gens, pair_act)
    neparts = _orbit_partition(g.order, g.nonedges(), gens, pair_act)
    return OrbitDecomposition(
        tuple(Orbit(tuple(m), g.degree(m[0])) for m in vparts),
        tuple(Orbit(tuple(m), pair_common_degree(g, m[0])) for m in eparts),
        tuple(Orbit(tuple(m), pair_common_degree(g, m[0])) for m in neparts),
    )


def count_induced(pattern: SmallGraph, host: SmallGraph) -> int:
    """Number of vertex subsets of `host` inducing a copy of `pattern`."""
    if pattern.order > host.order:
        return 0
    target = canonical_key(pattern)
    count = 0
    for subset in itertools.combinations(range(host.order), pattern.order):
        if canonical_key(host.subgraph(subset)) == target:
            count += 1
    return count


def find_isomorphism(g: SmallGraph, h: SmallGraph):
    """A vertex map g -> h, or None.  Built from canonical labellings."""
    if canonical_key(g) != canonical_key(h):
        return None
    pg = canonical_labelling(g)
    ph = canonical_labelling(h)
    inv_h = [0] * h.order
    for v, p in enumerate(ph):
        inv_h[p] = v
    return tuple(inv_h[pg[v]] for v in range(g.order))


def extension_count(g: SmallGraph, orbit_members, h: SmallGraph, u: int) -> int:
    """The f-function: with h of order |g|+1, count orbit elements whose
    image in h-u is fully adjacent to u.  0 when h-u is not a copy of g."""
    if h.order != g.order + 1:
        raise ValueError("h must have one vertex more than g")
    rest = [v for v in range(h.order) if v != u]
    phi0 = find_isomorphism(g, h.subgraph(rest))
    if phi0 is None:
        return 0
    phi = [rest[p] for p in phi0]  # g vertex -> h vertex
    nbr = h.rows[u]
    count = 0
    for member in orbit_members:
        vs = member if isinstance(member, tuple) else (member,)
        if all(nbr >> phi[v] & 1 for v in vs):
            count += 1
    return count


def _independent_sets(rows, n):
    """All bitmasks of independent sets (including empty)."""
    out = []

    def rec(start, mask, forbidden):
        out.append(mask)
        for v in range(start, n):
            if forbidden >> v & 1:
                continue
            rec(v + 1, mask | (1 << v), forbidden | rows[v])

    rec(0, 0, 0)
    return out


def _sparse_sets(rows, n):
    """Bitmasks that are independent with pairwise disjoint neighbourhoods
    (new-vertex neighbourhoods keeping a graph C3- and C4-free)."""
    out = []

    def second_neighbours(v):
        # vertices sharing a neighbour with v (common neighbour -> C4)
        bad = 0
        m = rows[v]
        while m:
            w = (m & -m).bit_length() - 1
            bad |= rows[w]
            m &= m - 1
        return bad

    def rec(start, mask, forbidden):
        out.append(mask)
        for v in range(start, n):
            if forbidden >> v & 1:
                continue
            rec(v + 1, mask | (1 << v),
                forbidden | rows[v] | second_neighbours(v))

    rec(0, 0, 0)
    return out


def _mask_orbit_reps(masks, gens):
    """One representative per orbit of the vertex-subset masks under the
    permutations in gens.  Automorphisms preserve the candidate predicates,
    so dropping orbit mates loses no isomorphism class."""
    if not gens:
        return masks
    reps = []
    seen = set()
    for m in masks:
        if m in seen:
            continue
        reps.append(m)
        seen.add(m)
        frontier = [m]
        while frontier:
            x = frontier.pop()
            for gen in gens:
                y = 0
                t = x
                while t:
                    v = (t & -t).bit_length() - 1
                    y |= 1 << gen[v]
                    t &= t - 1
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
    return reps


_CLASS_LIMITS = {
    GraphClass.GENERAL: 9,
    GraphClass.TRIANGLE_FREE: 10,
    GraphClass.TRIANGLE_QUAD_FREE: 11,
}


@lru_cache(maxsize=None)
def enumerate_graphs(order: int, cls: GraphClass = GraphClass.GENERAL
                     ) -> tuple[SmallGraph, ...]:
    """One canonical representative per isomorphism class, sorted by key.

    Vertex-augmentation from the class members one order down; the class
    predicates are hereditary, so this is exhaustive.
    """
    if order < 1 or order > _CLASS_LIMITS[cls]:
        raise ValueError(f"order {order} unsupported for {cls.value}")
    if order == 1:
        return (SmallGraph(1, (0,)),)
    seen: dict[int, SmallGraph] = {}
    for parent in enumerate_graphs(order - 1, cls):
        n = parent.order
        if cls is GraphClass.GENERAL:
            candidates = list(range(1 << n))
        elif cls is GraphClass.TRIANGLE_FREE:
            candidates = _independent_sets(parent.rows, n)
        else:
            candidates = _sparse_sets(parent.rows, n)
        for nbhd in _mask_orbit_reps(candidates, automorphism_generators(parent)):
            g = parent.add_vertex(nbhd)
            code = canonical_key(g)[1]
            if code not in seen:
                seen[code] = graph_from_key((order, code))
    return tuple(seen[c] for c in sorted(seen))


# ---------------------------------------------------------------------------
# graph6

class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def graph6_encode(g: SmallGraph) -> str:
    if g.order > 62:
        raise ValueError("only short-form graph6 (n <= 62) is supported")
    out = [chr(g.order + 63)]
    code = g.upper_triangle_code()
    nbits = g.order * (g.order - 1) // 2
    for i in range(0, nbits, 6):
        chunk = 0
        for j in range(6):
            if i + j < nbits:
                chunk |= (code >> (i + j) & 1) << (5 - j)
        out.append(chr(chunk + 63))
    return "".join(out)


def graph6_decode(text: str | bytes) -> SmallGraph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    text = text.rstrip("\n")
    if not text:
        raise Graph6Error("empty graph6 string", 0)
    if text.startswith(">>graph6<<"):
        text = text[10:]
    n = ord(text[0]) - 63
    if not 1 <= n <= 62:
        raise Graph6Error("unsupported or malformed order byte", 0)
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds supported maximum {MAX_ORDER}", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = text[1:]
    if len(body) < need:
        raise Graph6Error("truncated bit stream", 1 + len(body))
    code = 0
    for i, ch in enumerate(body[:need]):
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise Graph6Error("invalid graph6 byte", 1 + i)
        for j in range(6):
            bit = i * 6 + j
            if bit < nbits and val >> (5 - j) & 1:
                code |= 1 << bit
    return SmallGraph.from_upper_triangle_code(n, code)


# named small graphs used throughout

def empty_graph(n: int) -> SmallGraph:
    return SmallGraph(n, (0,) * n)


def complete_graph(n: int) -> SmallGraph:
    return SmallGraph.from_edges(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> SmallGraph:
    return SmallGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> SmallGraph:
    return SmallGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> SmallGraph:
    return SmallGraph.from_edges(leaves + 1, [(0, i + 1) for i in range(leaves)])


def complete_bipartite(a: int, b: int) -> SmallGraph:
    return SmallGraph.from_edges(a + b, [(i, a + j) for i in range(a)
                                         for j in range(b)])


def petersen_graph() -> SmallGraph:
    pairs = list(itertools.combinations(range(5), 2))
    idx = {p: i for i, p in enumerate(pairs)}
    edges = [(idx[p], idx[q]) for p, q in itertools.combinations(pairs, 2)
             if not set(p) & set(q)]
    return SmallGraph.from_edges(10, edges)
