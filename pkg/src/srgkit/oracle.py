"""Fixture SRGs and brute-force censuses used to validate every symbolic
result at small scale.

Fixtures are constructed programmatically and checked against the SRG
definition on load; nothing is trusted as opaque data.
"""

from __future__ import annotations

import io
import csv
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .graphcore import (CanonicalKey, SmallGraph, canonical_key, cycle_graph,
                        graph6_encode, graph_from_key, petersen_graph)
from .spectra import SrgParams
from .solve import SolutionTable

CENSUS_SUBSET_BUDGET = 2 * 10 ** 7


@dataclass
class FixtureSrg:
    name: str
    n: int
    rows: tuple[int, ...]          # adjacency bitmasks
    params: SrgParams

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def verify(self) -> None:
        n, k, lam, mu = self.params.tuple()
        if self.n != n:
            raise AssertionError(f"{self.name}: vertex count {self.n} != {n}")
        for u in range(n):
            if self.rows[u] >> u & 1:
                raise AssertionError(f"{self.name}: loop at {u}")
            if self.rows[u].bit_count() != k:
                raise AssertionError(f"{self.name}: vertex {u} has degree "
                                     f"{self.rows[u].bit_count()} != {k}")
        for u in range(n):
            for v in range(u + 1, n):
                if self.rows[u] >> v & 1 != self.rows[v] >> u & 1:
                    raise AssertionError(f"{self.name}: asymmetric {u},{v}")
                common = (self.rows[u] & self.rows[v]).bit_count()
                want = lam if self.adjacent(u, v) else mu
                if common != want:
                    raise AssertionError(
                        f"{self.name}: pair ({u},{v}) has {common} common "
                        f"neighbours, expected {want}")


def _from_edges(name, n, params, edges) -> FixtureSrg:
    rows = [0] * n
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    fx = FixtureSrg(name, n, tuple(rows), params)
    fx.verify()
    return fx


def _pentagon() -> FixtureSrg:
    g = cycle_graph(5)
    return _from_edges("pentagon", 5, SrgParams(5, 2, 0, 1), g.edges())


def _petersen() -> FixtureSrg:
    g = petersen_graph()
    return _from_edges("petersen", 10, SrgParams(10, 3, 0, 1), g.edges())


def _clebsch() -> FixtureSrg:
    # folded 5-cube: 4-bit words, adjacent when they differ in one bit or
    # in all four (the folded fifth coordinate)
    edges = []
    for x in range(16):
        for y in range(x + 1, 16):
            d = (x ^ y).bit_count()
            if d == 1 or d == 4:
                edges.append((x, y))
    return _from_edges("clebsch", 16, SrgParams(16, 5, 0, 2), edges)


def _hoffman_singleton() -> FixtureSrg:
    # five pentagons P_h and five pentagrams Q_i; P_h[j] ~ Q_i[h*i + j mod 5]
    def P(h, j):
        return 5 * h + j % 5

    def Q(i, j):
        return 25 + 5 * i + j % 5

    edges = set()
    for h in range(5):
        for j in range(5):
            edges.add(tuple(sorted((P(h, j), P(h, j + 1)))))
            edges.add(tuple(sorted((Q(h, j), Q(h, j + 2)))))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.add(tuple(sorted((P(h, j), Q(i, h * i + j)))))
    return _from_edges("hoffman_singleton", 50, SrgParams(50, 7, 0, 1),
                       sorted(edges))


_BUILDERS = {
    "pentagon": _pentagon,
    "petersen": _petersen,
    "clebsch": _clebsch,
    "hoffman_singleton": _hoffman_singleton,
}

_cache: dict[str, FixtureSrg] = {}


def build_fixture(name: str) -> FixtureSrg:
    if name not in _BUILDERS:
        raise KeyError(f"unknown fixture {name!r}; have "
                       f"{sorted(_BUILDERS)}")
    if name not in _cache:
        _cache[name] = _BUILDERS[name]()
    return _cache[name]


def _subset_code(rows, subset) -> int:
    code = 0
    bit = 0
    for j in range(1, len(subset)):
        rv = rows[subset[j]]
        for i in range(j):
            if rv >> subset[i] & 1:
                code |= 1 << bit
            bit += 1
    return code


def census(host: FixtureSrg, order: int,
           collect: CanonicalKey | None = None):
    """Exact induced-subgraph counts per isomorphism class.

    With `collect`, also returns the list of vertex subsets inducing that
    canonical key."""
    import math
    total = math.comb(host.n, order)
    if total > CENSUS_SUBSET_BUDGET:
        raise ValueError(f"C({host.n},{order}) = {total} exceeds the "
                         f"census budget")
    rows = host.rows
    memo: dict[int, CanonicalKey] = {}
    counts: dict[CanonicalKey, int] = {}
    hits = []
    for subset in itertools.combinations(range(host.n), order):
        code = _subset_code(rows, subset)
        key = memo.get(code)
        if key is None:
            key = canonical_key(SmallGraph.from_upper_triangle_code(order,
                                                                    code))
            memo[code] = key
        counts[key] = counts.get(key, 0) + 1
        if collect is not None and key == collect:
            hits.append(subset)
    assert sum(counts.values()) == total
    if collect is not None:
        return counts, hits
    return counts


@dataclass
class ValidationReport:
    host: str
    max_order: int
    free_values: dict[str, int]
    mismatches: list

    @property
    def ok(self) -> bool:
        return not self.mismatches


def cross_validate(host: FixtureSrg, max_order: int,
                   table: SolutionTable) -> ValidationReport:
    """Compare every solved count with the brute-force census, valuing free
    parameters from the census itself."""
    n, k, lam, mu = host.params.tuple()
    censuses = {o: census(host, o) for o in range(2, max_order + 1)}
    free = {}
    for fp in table.free_parameters:
        if fp.order <= max_order:
            free[fp.symbol] = censuses[fp.order].get(fp.key, 0)
    mismatches = []
    for o in range(2, max_order + 1):
        if o not in table.counts:
            break
        for key, expr in table.counts[o].items():
            got = expr.substitute(k, lam, mu, free) \
                if hasattr(expr, "substitute") else Fraction(expr)
            want = censuses[o].get(key, 0)
            if got != want:
                mismatches.append((key, got, want))
        accounted = sum(censuses[o].get(key, 0) for key in table.counts[o])
        if accounted != sum(censuses[o].values()):
            mismatches.append((o, "census classes outside the table"))
    return ValidationReport(host.name, max_order, free, mismatches)


def petersen_in_hoffman_singleton() -> int:
    """Count induced Petersen subgraphs by completing each induced C5.

    A Petersen copy splits over any of its twelve 5-cycles into the cycle
    plus a matched pentagram, so every copy is found exactly twelve times.
    """
    host = build_fixture("hoffman_singleton")
    c5 = canonical_key(cycle_graph(5))
    _, cycles = census(host, 5, collect=c5)
    petersen_key = canonical_key(petersen_graph())
    rows = host.rows
    found = 0
    for subset in cycles:
        smask = 0
        for v in subset:
            smask |= 1 << v
        # recover the cyclic order of the 5 vertices
        order = [subset[0]]
        while len(order) < 5:
            nxt = [v for v in subset
                   if v not in order and rows[order[-1]] >> v & 1]
            order.append(nxt[0] if len(order) > 1 else min(nxt))
        # candidates per cycle vertex: adjacent to it and to no other
        cand = []
        for v in order:
            cs = []
            for u in range(host.n):
                if smask >> u & 1 or not rows[v] >> u & 1:
                    continue
                if (rows[u] & smask).bit_count() == 1:
                    cs.append(u)
            cand.append(cs)

        def extend(i, chosen):
            nonlocal found
            if i == 5:
                verts = tuple(sorted(order + chosen))
                sub = SmallGraph.from_upper_triangle_code(
                    10, _subset_code(rows, verts))
                if canonical_key(sub) == petersen_key:
                    found += 1
                return
            for u in cand[i]:
                ok = True
                for j, w in enumerate(chosen):
                    want_adj = (i - j) % 5 in (2, 3)  # pentagram chords
                    if bool(rows[u] >> w & 1) != want_adj:
                        ok = False
                        break
                if ok:
                    extend(i + 1, chosen + [u])

        extend(0, [])
    assert found % 12 == 0
    return found // 12


def census_csv(host: FixtureSrg, order: int) -> str:
    counts = census(host, order)
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["graph6", "count"])
    for key in sorted(counts):
        w.writerow([graph6_encode(graph_from_key(key)), counts[key]])
    return buf.getvalue()
