"""Linear equations relating induced-subgraph counts of order o to the
solved counts one order down.

For a host graph on parameters (n, k, lambda, mu) and a pattern G of order
o-1 the recursion produces one equation per (G, type, orbit):

  type i    (n-o+1) P_G                    = sum_H P_G(H) P_H
  type ii   (k - deg v) |orbit| P_G        = sum over extensions at a vertex
  type iii  (lambda - deg e) |orbit| P_G   = ... at an edge (General only)
  type iv   (mu - deg pair) |orbit| P_G    = ... at a non-edge

plus one checksum row  C(n, o) = sum_H P_H.  The coefficient matrix is all
integers; only the left-hand sides carry parameters.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial

from .algebra import (Affine, CountExpression, RationalFunction,
                      K, LAM, MU, n_expression)
from .graphcore import (CanonicalKey, GraphClass, SmallGraph, canonical_key,
                        count_induced, enumerate_graphs, extension_count,
                        find_isomorphism, graph6_encode, graph_from_key,
                        orbits)

MOORE_K = 57
MOORE_N = 3250


class Mode(Enum):
    GENERAL = "general"
    TRIANGLE_FREE = "triangle-free"
    MOORE = "moore"

    @property
    def graph_class(self) -> GraphClass:
        return {Mode.GENERAL: GraphClass.GENERAL,
                Mode.TRIANGLE_FREE: GraphClass.TRIANGLE_FREE,
                Mode.MOORE: GraphClass.TRIANGLE_QUAD_FREE}[self]


_SOLVE_LIMITS = {Mode.GENERAL: 5, Mode.TRIANGLE_FREE: 8, Mode.MOORE: 10}


class ModeContext:
    """Scalar domain of a mode: (n, k, lambda, mu) plus the zero count.

    Symbolic modes work in rational functions of (k, mu) or (k, lambda, mu);
    Moore pins the parameters of the hypothetical srg(3250, 57, 0, 1) so
    everything collapses to plain rationals.
    """

    def __init__(self, mode: Mode):
        self.mode = mode
        if mode is Mode.MOORE:
            self.k = Fraction(MOORE_K)
            self.lam = Fraction(0)
            self.mu = Fraction(1)
            self.n = Fraction(MOORE_N)
        elif mode is Mode.TRIANGLE_FREE:
            self.k = RationalFunction(K)
            self.lam = RationalFunction(0)
            self.mu = RationalFunction(MU)
            self.n = RationalFunction(n_expression().expr.subs(LAM, 0))
        else:
            self.k = RationalFunction(K)
            self.lam = RationalFunction(LAM)
            self.mu = RationalFunction(MU)
            self.n = n_expression()

    def const(self, value):
        """Lift a scalar to the mode's count-expression type."""
        if self.mode is Mode.MOORE:
            return Affine(value)
        return CountExpression(value)

    def binomial_n(self, o: int):
        prod = self.const(1) * Fraction(1, factorial(o))
        for i in range(o):
            prod = prod * (self.n - i)
        return prod

    def seed_counts(self) -> dict[CanonicalKey, object]:
        """Order-2 base of the recursion: edges and non-edges."""
        edge = canonical_key(SmallGraph.from_edges(2, [(0, 1)]))
        nonedge = canonical_key(SmallGraph.from_edges(2, []))
        ne = self.n * self.k * Fraction(1, 2)
        return {edge: self.const(1) * ne,
                nonedge: self.binomial_n(2) - self.const(1) * ne}


@dataclass
class Row:
    coeffs: dict[int, int]
    lhs: object
    kind: str
    source: CanonicalKey | None
    orbit: int

    @property
    def provenance(self) -> tuple:
        return (self.kind, self.source, self.orbit)


@dataclass
class LinearSystem:
    order: int
    mode: Mode
    variables: list[CanonicalKey]
    rows: list[Row]

    @property
    def num_equations(self) -> int:
        return len(self.rows)

    @property
    def num_variables(self) -> int:
        return len(self.variables)

    def coefficient_matrix(self) -> list[dict[int, int]]:
        return [r.coeffs for r in self.rows]

    def to_json(self) -> str:
        def lhs_text(lhs):
            if isinstance(lhs, Affine):
                return repr(lhs)
            return repr(lhs)

        payload = {
            "schema": "linear-system/1",
            "order": self.order,
            "mode": self.mode.value,
            "variables": [graph6_encode(graph_from_key(v))
                          for v in self.variables],
            "rows": [{
                "type": r.kind,
                "source": (graph6_encode(graph_from_key(r.source))
                           if r.source else None),
                "orbit": r.orbit,
                "coefficients": {str(c): v for c, v in sorted(r.coeffs.items())},
                "lhs": lhs_text(r.lhs),
            } for r in self.rows],
        }
        return json.dumps(payload, indent=1)


def _orbit_rows(ctx: ModeContext, g: SmallGraph, key: CanonicalKey,
                pg) -> list[Row]:
    """Row skeletons for source graph g: type i plus one row per orbit."""
    dec = orbits(g)
    out = [Row({}, (ctx.n - g.order) * pg, "TypeI", key, 0)]
    for j, orb in enumerate(dec.vertex_orbits):
        factor = (ctx.k - orb.degree) * orb.size
        out.append(Row({}, factor * pg, "TypeII", key, j))
    if ctx.mode is Mode.GENERAL:
        for j, orb in enumerate(dec.edge_orbits):
            factor = (ctx.lam - orb.degree) * orb.size
            out.append(Row({}, factor * pg, "TypeIII", key, j))
    for j, orb in enumerate(dec.nonedge_orbits):
        if ctx.mode is Mode.MOORE and orb.degree >= ctx.mu:
            # a further common neighbour would close an induced 4-cycle, so
            # both sides of the row vanish identically within the class
            continue
        factor = (ctx.mu - orb.degree) * orb.size
        out.append(Row({}, factor * pg, "TypeIV", key, j))
    return out


def build_system(order: int, mode: Mode,
                 lower_counts: dict[CanonicalKey, object]) -> LinearSystem:
    """All equations for the given order from the counts one order down.

    lower_counts maps each canonical key of order-1 graphs in the class to
    its solved count expression.
    """
    if order < 3:
        raise ValueError("the recursion starts at order 3")
    cls = mode.graph_class
    ctx = ModeContext(mode)
    sources = enumerate_graphs(order - 1, cls)
    targets = enumerate_graphs(order, cls)
    var_index = {canonical_key(h): i for i, h in enumerate(targets)}

    rows: dict[tuple, Row] = {}
    source_meta = {}
    for g in sources:
        key = canonical_key(g)
        if key not in lower_counts:
            raise KeyError(f"no solved count for source graph {key}")
        for row in _orbit_rows(ctx, g, key, lower_counts[key]):
            rows[row.provenance] = row
        dec = orbits(g)
        source_meta[key] = (g, dec)

    # One pass over the targets fills every coefficient: deleting a vertex
    # of H identifies the source G, and the deleted vertex's adjacencies
    # give the extension counts of each orbit of G.
    for h in targets:
        hi = var_index[canonical_key(h)]
        hdec = orbits(h)
        for horb in hdec.vertex_orbits:
            u = horb.representative
            rest = [v for v in range(h.order) if v != u]
            sub = h.subgraph(rest)
            gkey = canonical_key(sub)
            g, gdec = source_meta[gkey]
            s = horb.size
            row = rows[("TypeI", gkey, 0)]
            row.coeffs[hi] = row.coeffs.get(hi, 0) + s
            phi0 = find_isomorphism(g, sub)
            phi = [rest[p] for p in phi0]
            nbr = h.rows[u]

            def add(kind, j, members):
                f = 0
                for m in members:
                    vs = m if isinstance(m, tuple) else (m,)
                    if all(nbr >> phi[v] & 1 for v in vs):
                        f += 1
                if f:
                    r = rows.get((kind, gkey, j))
                    assert r is not None, "extension hit a skipped vacuous row"
                    r.coeffs[hi] = r.coeffs.get(hi, 0) + f * s

            for j, orb in enumerate(gdec.vertex_orbits):
                add("TypeII", j, orb.members)
            if ctx.mode is Mode.GENERAL:
                for j, orb in enumerate(gdec.edge_orbits):
                    add("TypeIII", j, orb.members)
            for j, orb in enumerate(gdec.nonedge_orbits):
                add("TypeIV", j, orb.members)

    checksum = Row({i: 1 for i in range(len(targets))},
                   ctx.binomial_n(order), "TotalCount", None, 0)
    all_rows = list(rows.values()) + [checksum]
    return LinearSystem(order=order, mode=mode,
                        variables=[canonical_key(h) for h in targets],
                        rows=all_rows)


# single-row constructors, mirroring the four equation types one at a time

def equation_type_i(g: SmallGraph, pg, mode: Mode) -> Row:
    ctx = ModeContext(mode)
    key = canonical_key(g)
    targets = enumerate_graphs(g.order + 1, mode.graph_class)
    coeffs = {}
    for i, h in enumerate(targets):
        c = count_induced(g, h)
        if c:
            coeffs[i] = c
    return Row(coeffs, (ctx.n - g.order) * pg, "TypeI", key, 0)


def _typed_row(g: SmallGraph, pg, mode: Mode, kind: str, orbit_idx: int):
    ctx = ModeContext(mode)
    key = canonical_key(g)
    dec = orbits(g)
    pool = {"TypeII": dec.vertex_orbits, "TypeIII": dec.edge_orbits,
            "TypeIV": dec.nonedge_orbits}[kind]
    orb = pool[orbit_idx]
    if kind == "TypeII":
        members = [(v,) for v in orb.members]
        factor = (ctx.k - orb.degree) * orb.size
    elif kind == "TypeIII":
        members = orb.members
        factor = (ctx.lam - orb.degree) * orb.size
    else:
        members = orb.members
        factor = (ctx.mu - orb.degree) * orb.size
    coeffs = {}
    targets = enumerate_graphs(g.order + 1, mode.graph_class)
    for i, h in enumerate(targets):
        hdec = orbits(h)
        total = 0
        for horb in hdec.vertex_orbits:
            u = horb.representative
            if canonical_key(h.delete_vertex(u)) != key:
                continue
            total += extension_count(g, members, h, u) * horb.size
        if total:
            coeffs[i] = total
    return Row(coeffs, factor * pg, kind, key, orbit_idx)


def equation_type_ii(g: SmallGraph, orbit_idx: int, pg, mode: Mode) -> Row:
    return _typed_row(g, pg, mode, "TypeII", orbit_idx)


def equation_type_iii(g: SmallGraph, orbit_idx: int, pg, mode: Mode) -> Row:
    if mode is not Mode.GENERAL:
        raise ValueError("edge rows exist only in general mode")
    return _typed_row(g, pg, mode, "TypeIII", orbit_idx)


def equation_type_iv(g: SmallGraph, orbit_idx: int, pg, mode: Mode) -> Row:
    return _typed_row(g, pg, mode, "TypeIV", orbit_idx)
