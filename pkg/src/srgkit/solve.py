"""Order-by-order solution of the count recursion.

Each order's linear system is eliminated exactly; rank deficiencies
introduce free parameters (named P1, P2, ... in order of appearance) that
are carried through all later orders, where counts stay affine in them.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, gcd

import sympy

from .algebra import (Affine, CountExpression, LinComb, RationalFunction,
                      reduce_system)
from .equations import LinearSystem, Mode, ModeContext, build_system
from .graphcore import (CanonicalKey, GraphClass, SmallGraph, canonical_key,
                        complete_bipartite, enumerate_graphs, graph6_encode,
                        graph_from_key, petersen_graph, star_graph)

SOLVE_LIMITS = {Mode.GENERAL: 5, Mode.TRIANGLE_FREE: 8, Mode.MOORE: 10}

# published shapes: order -> (equations, variables, rank)
PAPER_SHAPES = {
    (Mode.TRIANGLE_FREE, 5): (30, 14, 14),
    (Mode.TRIANGLE_FREE, 6): (86, 38, 37),
    (Mode.TRIANGLE_FREE, 7): (301, 107, 106),
    (Mode.TRIANGLE_FREE, 8): (1238, 410, 402),
    (Mode.GENERAL, 4): (17, 11, 10),
    (Mode.GENERAL, 5): (60, 34, 31),
    (Mode.MOORE, 9): (1234, 293, 293),
    (Mode.MOORE, 10): (4221, 869, 868),
}


@dataclass
class FreeParameter:
    symbol: str
    key: CanonicalKey
    order: int


@dataclass
class OrderReport:
    equations: int
    variables: int
    rank: int
    free: int


@dataclass
class SolutionTable:
    mode: Mode
    counts: dict[int, dict[CanonicalKey, object]]
    free_parameters: list[FreeParameter] = field(default_factory=list)
    reports: dict[int, OrderReport] = field(default_factory=dict)
    fallbacks: list[str] = field(default_factory=list)

    def expression(self, key: CanonicalKey):
        for per_order in self.counts.values():
            if key in per_order:
                return per_order[key]
        raise KeyError(key)

    def to_json(self) -> str:
        payload = {
            "schema": "solution-table/1",
            "mode": self.mode.value,
            "free_parameters": [
                {"symbol": fp.symbol, "order": fp.order,
                 "graph6": graph6_encode(graph_from_key(fp.key))}
                for fp in self.free_parameters],
            "orders": {
                str(o): {graph6_encode(graph_from_key(k)): repr(e)
                         for k, e in per.items()}
                for o, per in sorted(self.counts.items())},
            "reports": {str(o): vars(r) for o, r in sorted(self.reports.items())},
            "fallbacks": self.fallbacks,
        }
        return json.dumps(payload, indent=1)


def _designated_free_keys(mode: Mode, order: int) -> list[CanonicalKey]:
    """Preferred free-parameter graphs, most preferred last (the elimination
    leaves trailing columns free)."""
    if mode is Mode.TRIANGLE_FREE and order == 6:
        return [canonical_key(complete_bipartite(3, 3))]
    if mode is Mode.TRIANGLE_FREE and order == 7:
        return [canonical_key(complete_bipartite(3, 4))]
    if mode is Mode.TRIANGLE_FREE and order == 8:
        return [canonical_key(g)
                for g in enumerate_graphs(8, GraphClass.TRIANGLE_FREE)
                if g.has_quadrangle()]
    if mode is Mode.GENERAL and order == 4:
        return [canonical_key(star_graph(3))]
    if mode is Mode.GENERAL and order == 5:
        k14 = star_graph(4)
        k14e = SmallGraph.from_edges(
            5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)])
        k23 = complete_bipartite(2, 3)
        return [canonical_key(k23), canonical_key(k14e), canonical_key(k14)]
    if mode is Mode.MOORE and order == 10:
        return [canonical_key(petersen_graph())]
    return []


def _combine_symbolic(lincomb: LinComb, lhs: list) -> CountExpression:
    """Materialise a row combination of CountExpressions, cancelling once."""
    const_parts = []
    term_parts: dict[str, list] = {}
    for i, c in sorted(lincomb.terms.items()):
        ce = lhs[i]
        cs = sympy.Rational(c.numerator, c.denominator)
        const_parts.append(cs * ce.constant.expr)
        for s, coeff in ce.terms.items():
            term_parts.setdefault(s, []).append(cs * coeff.expr)
    return CountExpression(
        RationalFunction(sympy.Add(*const_parts)),
        {s: RationalFunction(sympy.Add(*parts))
         for s, parts in term_parts.items()})


def _sample_params(mode: Mode, rng: random.Random):
    if mode is Mode.MOORE:
        return (Fraction(57), Fraction(0), Fraction(1))
    k = Fraction(rng.randint(40, 120))
    mu = Fraction(rng.randint(3, 30))
    lam = Fraction(0) if mode is Mode.TRIANGLE_FREE \
        else Fraction(rng.randint(1, 15))
    return (k, lam, mu)


def _value(expr, k, lam, mu, free):
    if isinstance(expr, CountExpression):
        return expr.substitute(k, lam, mu, free)
    if isinstance(expr, Affine):
        return expr.partial(free)
    return Fraction(expr)


def _check_system(system: LinearSystem, solution: dict[int, object],
                  table: SolutionTable, rng: random.Random,
                  points: int = 2) -> None:
    """Every original equation must hold; checked exactly for concrete
    systems and at random parameter points for symbolic ones."""
    for _ in range(points):
        k, lam, mu = _sample_params(system.mode, rng)
        free = {fp.symbol: Fraction(rng.randint(1, 997))
                for fp in table.free_parameters}
        xs = {c: _value(e, k, lam, mu, free) for c, e in solution.items()}
        for row in system.rows:
            left = _value(row.lhs, k, lam, mu, free)
            right = sum(v * xs[c] for c, v in row.coeffs.items())
            if left != right:
                raise ArithmeticError(
                    f"order {system.order}: row {row.provenance} fails "
                    f"verification at sample point")
        if system.mode is Mode.MOORE:
            break  # exact rationals, one pass suffices


def solve_counts(max_order: int, mode: Mode,
                 check: bool = True) -> SolutionTable:
    if not 3 <= max_order <= SOLVE_LIMITS[mode]:
        raise ValueError(f"max_order must be in [3, {SOLVE_LIMITS[mode]}] "
                         f"for {mode.value}")
    ctx = ModeContext(mode)
    table = SolutionTable(mode=mode, counts={2: ctx.seed_counts()})
    rng = random.Random(987654321)
    for o in range(3, max_order + 1):
        system = build_system(o, mode, table.counts[o - 1])
        nvars = system.num_variables
        key_col = {key: i for i, key in enumerate(system.variables)}
        designated = [key_col[k] for k in _designated_free_keys(mode, o)
                      if k in key_col]
        dset = set(designated)
        col_order = [c for c in range(nvars) if c not in dset] + designated
        red = reduce_system(system.coefficient_matrix(), nvars, col_order)

        expected = PAPER_SHAPES.get((mode, o))
        if expected is not None:
            if red.rank != expected[2] or nvars != expected[1]:
                raise ArithmeticError(
                    f"order {o} {mode.value}: got rank {red.rank} on {nvars} "
                    f"variables, published shape is {expected}")
        elif red.rank != nvars:
            raise ArithmeticError(
                f"order {o} {mode.value}: unexpected rank deficiency "
                f"{nvars - red.rank}")

        solution: dict[int, object] = {}
        for c in red.free_cols:
            name = f"P{len(table.free_parameters) + 1}"
            table.free_parameters.append(
                FreeParameter(name, system.variables[c], o))
            if c not in dset:
                table.fallbacks.append(
                    f"order {o}: column {c} fell out free instead of a "
                    f"designated graph")
            solution[c] = (Affine.symbol(name) if mode is Mode.MOORE
                           else CountExpression.symbol(name))

        lhs = [r.lhs for r in system.rows]
        for col, (coeffs, rhs) in red.pivots.items():
            if mode is Mode.MOORE:
                expr = rhs.materialise(lhs)
                if isinstance(expr, Fraction):
                    expr = Affine(expr)
            else:
                expr = _combine_symbolic(rhs, lhs)
            for f in red.free_cols:
                cf = coeffs.get(f)
                if cf:
                    expr = expr - cf * solution[f]
            solution[col] = expr

        counts_o = {system.variables[c]: solution[c] for c in range(nvars)}
        if check:
            _check_system(system, solution, table, rng)
        table.counts[o] = counts_o
        table.reports[o] = OrderReport(system.num_equations, nvars,
                                       red.rank, len(red.free_cols))
    return table


def choose_free_parameters(mode: Mode, order: int,
                           variables: list[CanonicalKey],
                           free_cols: list[int]) -> list[CanonicalKey]:
    """The free-parameter graphs a solved system actually selected."""
    return [variables[c] for c in free_cols]


def evaluate_counts(table: SolutionTable, k, lam, mu,
                    free: dict[str, int] | None = None,
                    orders=None) -> dict[CanonicalKey, int]:
    """Concrete integer counts; raises on negative or non-integral results."""
    if mu == 0:
        raise ValueError("mu = 0 is outside the primitive range")
    free = {s: Fraction(v) for s, v in (free or {}).items()}
    out = {}
    problems = []
    for o, per in sorted(table.counts.items()):
        if orders is not None and o not in orders:
            continue
        for key, expr in per.items():
            v = _value(expr, k, lam, mu, free)
            if isinstance(v, Affine):
                problems.append((key, v, "unvalued free parameter"))
            elif v.denominator != 1:
                problems.append((key, v, "non-integral"))
            elif v < 0:
                problems.append((key, v, "negative"))
            else:
                out[key] = int(v)
    if problems:
        raise ArithmeticError(f"invalid counts at ({k},{lam},{mu}): "
                              f"{problems[:5]}")
    return out


@dataclass
class ParameterBounds:
    symbol: str
    lower: int
    upper: int | None
    lower_binding: CanonicalKey | None
    upper_binding: CanonicalKey | None
    modulus: int = 1
    residue: int = 0
    infeasible: bool = False


def _crt_merge(m1, r1, m2, r2):
    g = gcd(m1, m2)
    if (r2 - r1) % g:
        return None
    lcm = m1 // g * m2
    step = m1
    x = r1
    # advance x by multiples of m1 until it satisfies the second congruence
    t = ((r2 - x) // g * pow(m1 // g, -1, m2 // g)) % (m2 // g)
    x = (x + step * t) % lcm
    return lcm, x


def bound_free_parameter(table: SolutionTable, symbol: str,
                         params=None) -> ParameterBounds:
    """Bounds forced by non-negativity and integrality of all counts."""
    if params is None:
        if table.mode is not Mode.MOORE:
            raise ValueError("concrete parameters required outside Moore mode")
        params = (57, 0, 1)
    k, lam, mu = params
    lower, upper = 0, None
    lo_bind = up_bind = None
    modulus, residue = 1, 0
    infeasible = False
    for o, per in sorted(table.counts.items()):
        for key, expr in per.items():
            v = _value(expr, k, lam, mu, {})
            if isinstance(v, Fraction):
                continue
            c1 = v.coeffs.get(symbol)
            if not c1 or set(v.coeffs) != {symbol}:
                continue
            c0 = v.const
            ratio = -c0 / c1
            if c1 < 0:
                cand = floor(ratio)
                if upper is None or cand < upper:
                    upper, up_bind = cand, key
            else:
                cand = ceil(ratio)
                if cand > lower:
                    lower, lo_bind = cand, key
            # integrality: c0 + c1*x must be an integer
            b = (c0.denominator * c1.denominator
                 // gcd(c0.denominator, c1.denominator))
            if b > 1:
                a = int(c1 * b) % b
                r = int(-c0 * b) % b
                g = gcd(a, b)
                if r % g:
                    infeasible = True
                    continue
                m2 = b // g
                r2 = (r // g * pow(a // g, -1, m2)) % m2 if m2 > 1 else 0
                merged = _crt_merge(modulus, residue, m2, r2)
                if merged is None:
                    infeasible = True
                else:
                    modulus, residue = merged
    if modulus > 1 and not infeasible:
        if (lower - residue) % modulus:
            lower += modulus - (lower - residue) % modulus
        if upper is not None and (upper - residue) % modulus:
            upper -= (upper - residue) % modulus
    if upper is not None and lower > upper:
        infeasible = True
    return ParameterBounds(symbol, lower, upper, lo_bind, up_bind,
                           modulus, residue, infeasible)


def residues_mod(table: SolutionTable, p: int, order: int,
                 params=None) -> dict[CanonicalKey, tuple]:
    """Residues mod p of every order-`order` count: (constant residue,
    per-symbol coefficient residues; None when p divides a denominator)."""
    if params is None:
        if table.mode is not Mode.MOORE:
            raise ValueError("concrete parameters required outside Moore mode")
        params = (57, 0, 1)
    k, lam, mu = params
    out = {}
    for key, expr in table.counts[order].items():
        v = _value(expr, k, lam, mu, {})
        if isinstance(v, Fraction):
            v = Affine(v)
        if v.const.denominator != 1:
            raise ArithmeticError(f"non-integral constant term for {key}")
        coeff_res = {}
        for s, c in v.coeffs.items():
            if c.denominator % p == 0:
                coeff_res[s] = None
            else:
                coeff_res[s] = (c.numerator *
                                pow(c.denominator, -1, p)) % p
        out[key] = (int(v.const) % p, coeff_res)
    return out


def table_to_csv(table: SolutionTable, k, lam, mu,
                 free: dict[str, int] | None = None) -> str:
    counts = evaluate_counts(table, k, lam, mu, free)
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["order", "graph6", "count"])
    for key in sorted(counts, key=lambda t: (t[0], t[1])):
        w.writerow([key[0], graph6_encode(graph_from_key(key)), counts[key]])
    return buf.getvalue()
