"""Sparse exact linear algebra over the rationals.

Rows are dicts mapping column index to a coefficient.  Right-hand sides are
tracked as linear combinations of the original rows (`LinComb`), so the
elimination never touches the possibly expensive expressions the rows came
from; callers materialise each combination once at the end.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import sympy

K, LAM, MU = sympy.symbols("k lambda mu", positive=True)


class LinComb:
    """Sparse rational linear combination of source-row indices."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Fraction] | None = None):
        self.terms = terms if terms is not None else {}

    @classmethod
    def unit(cls, i: int) -> "LinComb":
        return cls({i: Fraction(1)})

    def scaled(self, c: Fraction) -> "LinComb":
        if not c:
            return LinComb()
        return LinComb({i: c * v for i, v in self.terms.items()})

    def sub_scaled(self, other: "LinComb", c: Fraction) -> "LinComb":
        """self - c * other"""
        if not c:
            return LinComb(dict(self.terms))
        out = dict(self.terms)
        for i, v in other.terms.items():
            w = out.get(i, 0) - c * v
            if w:
                out[i] = w
            else:
                out.pop(i, None)
        return LinComb(out)

    def is_zero(self) -> bool:
        return not self.terms

    def materialise(self, sources):
        """Evaluate against a list (or dict) of per-row values."""
        total = 0
        for i, c in sorted(self.terms.items()):
            total = total + c * sources[i]
        return total

    def __eq__(self, other):
        return isinstance(other, LinComb) and self.terms == other.terms

    def __repr__(self):
        return f"LinComb({self.terms!r})"


@dataclass
class ReducedSystem:
    """Reduced row echelon form with symbolic right-hand sides.

    pivot of column p: coefficient row normalised to 1 at p (other entries
    only on free columns) plus the LinComb giving its RHS in terms of the
    source rows.  zero_rows are combinations whose coefficients cancelled
    entirely; each must materialise to zero for the system to be consistent.
    """

    ncols: int
    pivots: dict[int, tuple[dict[int, Fraction], LinComb]]
    free_cols: list[int]
    zero_rows: list[LinComb] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.pivots)


def reduce_system(rows: list[dict[int, int]], ncols: int,
                  col_order: list[int] | None = None) -> ReducedSystem:
    """Gauss-Jordan elimination preferring pivots early in col_order.

    Columns late in col_order that never get a pivot come out free, which is
    how a caller designates its preferred free parameters: list them last.
    """
    if col_order is None:
        col_order = list(range(ncols))
    work = [({c: Fraction(v) for c, v in row.items() if v}, LinComb.unit(i))
            for i, row in enumerate(rows)]
    pivots: dict[int, tuple[dict, LinComb]] = {}
    zero_rows: list[LinComb] = []
    live = [rw for rw in work if rw[0]]
    zero_rows.extend(rhs for coeffs, rhs in work if not coeffs)
    for col in col_order:
        pick = None
        for idx, (coeffs, _) in enumerate(live):
            if col in coeffs:
                pick = idx
                break
        if pick is None:
            continue
        coeffs, rhs = live.pop(pick)
        inv = 1 / coeffs[col]
        if inv != 1:
            coeffs = {c: v * inv for c, v in coeffs.items()}
            rhs = rhs.scaled(inv)
        # clear the column from earlier pivot rows and the remaining pool
        for pcol, (pcoeffs, prhs) in list(pivots.items()):
            f = pcoeffs.get(col)
            if f:
                for c, v in coeffs.items():
                    w = pcoeffs.get(c, 0) - f * v
                    if w:
                        pcoeffs[c] = w
                    else:
                        pcoeffs.pop(c, None)
                pivots[pcol] = (pcoeffs, prhs.sub_scaled(rhs, f))
        nxt = []
        for ocoeffs, orhs in live:
            f = ocoeffs.get(col)
            if f:
                for c, v in coeffs.items():
                    w = ocoeffs.get(c, 0) - f * v
                    if w:
                        ocoeffs[c] = w
                    else:
                        ocoeffs.pop(c, None)
                orhs = orhs.sub_scaled(rhs, f)
            if ocoeffs:
                nxt.append((ocoeffs, orhs))
            else:
                zero_rows.append(orhs)
        live = nxt
        pivots[col] = (coeffs, rhs)
        if not live:
            # remaining columns in order can still pick up pivots only from
            # live rows, so we are done
            break
    free = [c for c in col_order if c not in pivots]
    return ReducedSystem(ncols=ncols, pivots=pivots, free_cols=free,
                         zero_rows=zero_rows)


class RationalFunction:
    """Ratio of polynomials in (k, lambda, mu) over the rationals.

    Thin normalising wrapper around a sympy expression; kept cancelled with
    a positive leading denominator coefficient so equality is structural.
    """

    __slots__ = ("expr",)

    def __init__(self, expr):
        if isinstance(expr, RationalFunction):
            expr = expr.expr
        expr = sympy.cancel(sympy.sympify(expr))
        num, den = expr.as_numer_denom()
        if den.could_extract_minus_sign():
            num, den = -num, -den
        self.expr = num / den

    @property
    def numerator(self):
        return self.expr.as_numer_denom()[0]

    @property
    def denominator(self):
        return self.expr.as_numer_denom()[1]

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other.expr
        return sympy.sympify(other)

    def __add__(self, other):
        if isinstance(other, (CountExpression, Affine)):
            return NotImplemented
        return RationalFunction(self.expr + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (CountExpression, Affine)):
            return NotImplemented
        return RationalFunction(self.expr - self._coerce(other))

    def __rsub__(self, other):
        return RationalFunction(self._coerce(other) - self.expr)

    def __mul__(self, other):
        if isinstance(other, (CountExpression, Affine)):
            return NotImplemented
        return RationalFunction(self.expr * self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        d = self._coerce(other)
        if d == 0:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.expr / d)

    def __rtruediv__(self, other):
        if self.expr == 0:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self._coerce(other) / self.expr)

    def __neg__(self):
        return RationalFunction(-self.expr)

    def substitute(self, k, lam=None, mu=None) -> Fraction:
        subs = {K: sympy.Rational(k)}
        if lam is not None:
            subs[LAM] = sympy.Rational(lam)
        if mu is not None:
            subs[MU] = sympy.Rational(mu)
        val = self.expr.subs(subs)
        if not val.is_Rational:
            raise ValueError(f"evaluation left free symbols: {val}")
        return Fraction(val.p, val.q)

    def is_zero(self) -> bool:
        return self.expr == 0

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            other = other.expr
        return sympy.cancel(self.expr - other) == 0

    def __hash__(self):
        return hash(self.expr)

    def __repr__(self):
        return f"RationalFunction({self.expr})"

    def __str__(self):
        return str(self.expr)


def n_expression() -> RationalFunction:
    """Vertex count of an SRG in terms of (k, lambda, mu)."""
    return RationalFunction(K + 1 + K * (K - LAM - 1) / MU)


class CountExpression:
    """Affine expression  constant + sum coeff_i * P_i  with rational-function
    coefficients; P_i are the free count parameters introduced by earlier
    orders of the recursion."""

    __slots__ = ("constant", "terms")

    def __init__(self, constant=0, terms: dict | None = None):
        self.constant = (constant if isinstance(constant, RationalFunction)
                         else RationalFunction(constant))
        clean = {}
        if terms:
            for s, c in terms.items():
                c = c if isinstance(c, RationalFunction) else RationalFunction(c)
                if not c.is_zero():
                    clean[s] = c
        self.terms = clean

    @classmethod
    def symbol(cls, name: str) -> "CountExpression":
        return cls(0, {name: RationalFunction(1)})

    def __add__(self, other):
        if not isinstance(other, CountExpression):
            other = CountExpression(other)
        terms = dict(self.terms)
        for s, c in other.terms.items():
            terms[s] = terms.get(s, RationalFunction(0)) + c
        return CountExpression(self.constant + other.constant, terms)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1) * other

    def __rsub__(self, other):
        return (-1) * self + other

    def __mul__(self, scalar):
        if isinstance(scalar, CountExpression):
            if scalar.terms:
                raise ValueError("product of two non-constant count expressions")
            scalar = scalar.constant
        return CountExpression(self.constant * scalar,
                               {s: c * scalar for s, c in self.terms.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def substitute(self, k, lam=None, mu=None, free: dict | None = None):
        """Exact evaluation; free maps symbol name to its value.  Returns a
        Fraction, or an Affine form when some symbols are left unvalued."""
        free = free or {}
        out = Affine(self.constant.substitute(k, lam, mu))
        for s, c in self.terms.items():
            cv = c.substitute(k, lam, mu)
            if s in free:
                out = out + cv * Fraction(free[s])
            else:
                out = out + cv * Affine.symbol(s)
        if out.is_constant():
            return out.const
        return out

    def is_constant(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, CountExpression):
            other = CountExpression(other)
        if self.constant != other.constant:
            return False
        keys = set(self.terms) | set(other.terms)
        zero = RationalFunction(0)
        return all(self.terms.get(s, zero) == other.terms.get(s, zero)
                   for s in keys)

    def __repr__(self):
        parts = [str(self.constant)]
        for s, c in sorted(self.terms.items()):
            parts.append(f"({c})*{s}")
        return " + ".join(parts)


def row_reduce(matrix: list[list[int]] | list[dict[int, int]], b: list,
               col_order: list[int] | None = None,
               verify: bool = True) -> "SolvedSystem":
    """Exact elimination of M x = b with symbolic right-hand sides.

    Returns the rank, pivot columns, a particular solution (free variables
    set to zero) and an integer nullspace basis.  Rows whose coefficients
    cancel but whose right-hand side does not are reported, never dropped.
    """
    if matrix and not isinstance(matrix[0], dict):
        ncols = len(matrix[0])
        rows = [{j: v for j, v in enumerate(r) if v} for r in matrix]
    else:
        rows = matrix
        ncols = 1 + max((c for r in rows for c in r), default=-1)
        if col_order is not None:
            ncols = max(ncols, len(col_order))
    red = reduce_system(rows, ncols, col_order)
    zero = b[0] * 0 if b else 0
    particular = [zero] * ncols
    for col, (_, rhs) in red.pivots.items():
        particular[col] = rhs.materialise(b)
    basis = []
    for f in red.free_cols:
        vec = {f: Fraction(1)}
        for col, (coeffs, _) in red.pivots.items():
            c = coeffs.get(f)
            if c:
                vec[col] = -c
        denom = 1
        for v in vec.values():
            denom = denom * v.denominator // _gcd(denom, v.denominator)
        ivec = [0] * ncols
        for c, v in vec.items():
            ivec[c] = int(v * denom)
        basis.append(ivec)
    residuals = [rhs.materialise(b) for rhs in red.zero_rows]
    bad = [r for r in residuals if not _expr_is_zero(r)]
    if verify:
        for vec in basis:
            for row in rows:
                assert sum(row.get(c, 0) * vec[c] for c in row) == 0
        for i, row in enumerate(rows):
            lhs = zero
            for c, v in row.items():
                lhs = lhs + v * particular[c]
            if not _expr_is_zero(lhs - b[i]):
                bad.append(lhs - b[i])
    return SolvedSystem(rank=red.rank, pivot_columns=sorted(red.pivots),
                        free_columns=red.free_cols, particular=particular,
                        nullspace=basis, inconsistent=bad, reduced=red)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _expr_is_zero(x) -> bool:
    if isinstance(x, CountExpression):
        return x.constant.is_zero() and not x.terms
    if isinstance(x, RationalFunction):
        return x.is_zero()
    if isinstance(x, Affine):
        return not x.const and not x.coeffs
    return x == 0


@dataclass
class SolvedSystem:
    rank: int
    pivot_columns: list[int]
    free_columns: list[int]
    particular: list
    nullspace: list[list[int]]
    inconsistent: list
    reduced: ReducedSystem

    @property
    def consistent(self) -> bool:
        return not self.inconsistent


class Affine:
    """Rational affine form  const + sum coeff * symbol.

    A light stand-in for a computer algebra expression when everything is a
    plain rational; orders of magnitude faster than sympy for the big
    concrete systems.
    """

    __slots__ = ("const", "coeffs")

    def __init__(self, const=0, coeffs: dict | None = None):
        self.const = Fraction(const)
        self.coeffs = coeffs if coeffs is not None else {}

    @classmethod
    def symbol(cls, name: str) -> "Affine":
        return cls(0, {name: Fraction(1)})

    def __add__(self, other):
        if isinstance(other, Affine):
            out = dict(self.coeffs)
            for s, c in other.coeffs.items():
                w = out.get(s, 0) + c
                if w:
                    out[s] = w
                else:
                    out.pop(s, None)
            return Affine(self.const + other.const, out)
        return Affine(self.const + other, dict(self.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1) * other

    def __rsub__(self, other):
        return (-1) * self + other

    def __mul__(self, other):
        if isinstance(other, Affine):
            if not other.coeffs:
                other = other.const
            elif not self.coeffs:
                return other * self.const
            else:
                raise ValueError("product of two non-constant affine forms")
        c = Fraction(other)
        if not c:
            return Affine()
        return Affine(self.const * c, {s: v * c for s, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def subs(self, values: dict) -> Fraction:
        total = self.const
        for s, c in self.coeffs.items():
            total += c * Fraction(values[s])
        return total

    def partial(self, values: dict):
        """Substitute the symbols present in values; Fraction if none
        remain."""
        const = self.const
        coeffs = {}
        for s, c in self.coeffs.items():
            if s in values:
                const += c * Fraction(values[s])
            else:
                coeffs[s] = c
        return const if not coeffs else Affine(const, coeffs)

    def is_constant(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, Affine):
            return self.const == other.const and self.coeffs == other.coeffs
        return not self.coeffs and self.const == other

    def __repr__(self):
        parts = [str(self.const)] if self.const or not self.coeffs else []
        for s, c in sorted(self.coeffs.items()):
            parts.append(f"{c}*{s}")
        return " + ".join(parts)
