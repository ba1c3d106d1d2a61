"""Cauchy-Schwarz bounds on induced-subgraph counts from the spherical
representation of an SRG.

Vertices project onto the unit sphere in the s-eigenspace with pairwise
inner products p (adjacent) or q (non-adjacent); a subgraph is represented
by its normalised vertex-vector sum.  Summing a Gegenbauer polynomial over
all pairs of copies of two patterns X and Y gives three quantities obeying
S_XY^2 <= S_XX * S_YY, and the sums are affine in one unknown count, so the
inequality pins that count from one side.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath as mp

from .algebra import Affine
from .graphcore import (CanonicalKey, GraphClass, SmallGraph, canonical_key,
                        enumerate_graphs)
from .spectra import SrgParams, spectrum

WORK_DPS = 50


@dataclass(frozen=True)
class ProjectionGeometry:
    p: Fraction
    q: Fraction
    g: int
    alpha: Fraction


def geometry(params: SrgParams) -> ProjectionGeometry:
    sp = spectrum(params)
    if not sp.s.is_rational:
        raise ValueError("conference parameters have irrational eigenvalues")
    s = sp.s.as_fraction()
    g = sp.g.as_fraction()
    if g.denominator != 1:
        raise ValueError("non-integral multiplicity")
    return ProjectionGeometry(
        p=Fraction(s, params.k),
        q=Fraction(-(s + 1), params.n - params.k - 1),
        g=int(g),
        alpha=Fraction(int(g) - 2, 2))


def gegenbauer(t: int, alpha, x):
    """C_t^alpha(x) by the three-term recurrence."""
    a = mp.mpf(alpha.numerator) / alpha.denominator \
        if isinstance(alpha, Fraction) else mp.mpf(alpha)
    x = mp.mpf(x) if not isinstance(x, mp.mpf) else x
    if t == 0:
        return mp.mpf(1)
    prev, cur = mp.mpf(1), 2 * a * x
    for m in range(2, t + 1):
        prev, cur = cur, (2 * x * (a + m - 1) * cur -
                          (2 * a + m - 2) * prev) / m
    return cur


def norm_radicand(g: SmallGraph, geom: ProjectionGeometry) -> Fraction:
    """Squared length of a subgraph's vertex-vector sum."""
    edges = g.num_edges()
    nonedges = g.order * (g.order - 1) // 2 - edges
    return g.order + 2 * geom.p * edges + 2 * geom.q * nonedges


@dataclass
class PairConfiguration:
    union_key: CanonicalKey
    overlap: int
    cross_edges: int
    cross_nonedges: int


def rep_inner_product(config: PairConfiguration, geom: ProjectionGeometry,
                      x_graph: SmallGraph, y_graph: SmallGraph):
    rad = norm_radicand(x_graph, geom) * norm_radicand(y_graph, geom)
    if rad <= 0:
        raise ValueError("nonpositive normaliser radicand; representation "
                         "degenerates for this pattern")
    num = (config.overlap + geom.p * config.cross_edges +
           geom.q * config.cross_nonedges)
    return (mp.mpf(num.numerator) / num.denominator) / \
        mp.sqrt(mp.mpf(rad.numerator) / rad.denominator)


@lru_cache(maxsize=None)
def _pattern_subsets(wkey: CanonicalKey, pkey: CanonicalKey):
    """Bitmasks of vertex subsets of W inducing the pattern."""
    w = SmallGraph.from_upper_triangle_code(*wkey)
    order = pkey[0]
    out = []
    for subset in itertools.combinations(range(w.order), order):
        if canonical_key(w.subgraph(subset)) == pkey:
            mask = 0
            for v in subset:
                mask |= 1 << v
            out.append((mask, subset))
    return tuple(out)


def _cross_counts(w: SmallGraph, a, b) -> tuple[int, int, int]:
    overlap = len(set(a) & set(b))
    e = 0
    for u in a:
        ru = w.rows[u]
        for v in b:
            if u != v and ru >> v & 1:
                e += 1
    ebar = len(a) * len(b) - overlap - e
    return overlap, e, ebar


def _covering_placements(wkey: CanonicalKey, xkey: CanonicalKey,
                         ykey: CanonicalKey):
    """Multiset of (overlap, cross edges, cross non-edges) over ordered
    subset pairs covering W."""
    w = SmallGraph.from_upper_triangle_code(*wkey)
    full = (1 << w.order) - 1
    tallies: dict[tuple, int] = {}
    xs = _pattern_subsets(wkey, xkey)
    ys = _pattern_subsets(wkey, ykey) if ykey != xkey else xs
    for amask, a in xs:
        for bmask, b in ys:
            if amask | bmask != full:
                continue
            cfg = _cross_counts(w, a, b)
            tallies[cfg] = tallies.get(cfg, 0) + 1
    return tallies


def _affine_pair(value, symbol):
    """(constant, coefficient) of a count that is affine in `symbol`."""
    if isinstance(value, Affine):
        extra = set(value.coeffs) - {symbol}
        if extra:
            raise ValueError(f"unexpected free symbols {extra}")
        return value.const, value.coeffs.get(symbol, Fraction(0))
    return Fraction(value), Fraction(0)


def pairing_sum(x_graph: SmallGraph, y_graph: SmallGraph,
                counts: dict[CanonicalKey, object], cls: GraphClass,
                geom: ProjectionGeometry, t: int, symbol: str):
    """S_XY = sum over union types W of P_W times the Gegenbauer sum over
    covering placements; returned as (constant, coefficient) mpf pair."""
    xkey = canonical_key(x_graph)
    ykey = canonical_key(y_graph)
    s0 = mp.mpf(0)
    s1 = mp.mpf(0)
    lo = max(x_graph.order, y_graph.order)
    hi = x_graph.order + y_graph.order
    for o in range(lo, hi + 1):
        for w in enumerate_graphs(o, cls):
            wkey = canonical_key(w)
            if wkey not in counts:
                raise KeyError(f"no count available for union type {wkey}")
            c0, c1 = _affine_pair(counts[wkey], symbol)
            if not c0 and not c1:
                continue
            tallies = _covering_placements(wkey, xkey, ykey)
            if not tallies:
                continue
            inner = mp.mpf(0)
            for (overlap, e, ebar), mult in sorted(tallies.items()):
                cfg = PairConfiguration(wkey, overlap, e, ebar)
                ip = rep_inner_product(cfg, geom, x_graph, y_graph)
                inner += mult * gegenbauer(t, geom.alpha, ip)
            s0 += (mp.mpf(c0.numerator) / c0.denominator) * inner
            s1 += (mp.mpf(c1.numerator) / c1.denominator) * inner
    return s0, s1


@dataclass
class GeomBound:
    value: mp.mpf
    is_upper: bool
    t: int
    symbol: str

    @property
    def parity_consistent(self) -> bool:
        """The observed pattern: odd t gives upper bounds, even t lower."""
        return self.is_upper == (self.t % 2 == 1)


def _solve_bound(sxy, sxx, syy, t, symbol) -> GeomBound:
    """Rearrange S_XY^2 <= S_XX * S_YY for the single linear unknown."""
    a0, a1 = sxy
    b0, b1 = sxx
    c0, c1 = syy
    if a1 != 0 or (b1 != 0 and c1 != 0):
        raise ValueError("unknown count enters quadratically for this X/Y")
    if b1 != 0:
        b0, b1, c0, c1 = c0, c1, b0, b1
    coeff = b0 * c1
    if coeff == 0:
        raise ValueError("unknown count does not appear in the inequality")
    value = (a0 * a0 - b0 * c0) / coeff
    return GeomBound(value=value, is_upper=coeff < 0, t=t, symbol=symbol)


def cauchy_schwarz_bound(x_graph: SmallGraph, y_graph: SmallGraph,
                         counts: dict[CanonicalKey, object],
                         cls: GraphClass, geom: ProjectionGeometry,
                         t: int, symbol: str) -> GeomBound:
    with mp.workdps(WORK_DPS):
        sxy = pairing_sum(x_graph, y_graph, counts, cls, geom, t, symbol)
        sxx = pairing_sum(x_graph, x_graph, counts, cls, geom, t, symbol)
        syy = pairing_sum(y_graph, y_graph, counts, cls, geom, t, symbol)
        return _solve_bound(sxy, sxx, syy, t, symbol)


def concrete_counts(table, params: SrgParams, max_order: int):
    """Per-key values at concrete parameters, affine in the free symbols."""
    out = {canonical_key(SmallGraph(1, (0,))): Fraction(params.n)}
    for o in range(2, max_order + 1):
        if o not in table.counts:
            raise KeyError(f"solution table does not reach order {o}")
        for key, expr in table.counts[o].items():
            if hasattr(expr, "substitute"):
                out[key] = expr.substitute(params.k, params.lam, params.mu,
                                           {})
            else:
                out[key] = expr
    return out


def k33_bound(params: SrgParams, x_graph: SmallGraph, y_graph: SmallGraph,
              t: int, table) -> GeomBound:
    """Bound on the K33 count of a triangle-free SRG."""
    geom = geometry(params)
    max_order = 2 * max(x_graph.order, y_graph.order)
    counts = concrete_counts(table, params, max_order)
    symbol = table.free_parameters[0].symbol if table.free_parameters \
        else "P1"
    return cauchy_schwarz_bound(x_graph, y_graph, counts,
                                GraphClass.TRIANGLE_FREE, geom, t, symbol)


def petersen_bound(x_graph: SmallGraph, t: int, table) -> GeomBound:
    """Bound on the Petersen count of srg(3250,57,0,1); Y is the induced
    C5 representatives."""
    from .graphcore import cycle_graph
    params = SrgParams(3250, 57, 0, 1)
    geom = geometry(params)
    y_graph = cycle_graph(5)
    max_order = 2 * max(x_graph.order, 5)
    counts = {}
    for o in range(1, max_order + 1):
        if o == 1:
            counts[canonical_key(SmallGraph(1, (0,)))] = Fraction(3250)
        elif o not in table.counts:
            raise KeyError(f"Moore table does not reach order {o}")
        else:
            counts.update(table.counts[o])
    symbol = table.free_parameters[0].symbol
    return cauchy_schwarz_bound(x_graph, y_graph, counts,
                                GraphClass.TRIANGLE_QUAD_FREE, geom, t,
                                symbol)


def bounds_csv(rows) -> str:
    import csv
    import io
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["n", "k", "mu", "X", "Y", "t", "bound", "direction"])
    for (params, xname, yname, t, bound) in rows:
        w.writerow([params.n, params.k, params.mu, xname, yname, t,
                    mp.nstr(bound.value, 20),
                    "upper" if bound.is_upper else "lower"])
    return buf.getvalue()
