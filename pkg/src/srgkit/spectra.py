"""Eigenvalues and feasibility screening of SRG parameter sets.

Everything is exact: eigenvalues are carried as a + b*sqrt(D) with rational
a, b so the Krein tests classify equality cases correctly even for
conference graphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class QuadValue:
    """Exact a + b*sqrt(D) with rational a, b and a fixed nonnegative D."""

    __slots__ = ("a", "b", "D")

    def __init__(self, a, b=0, D=0):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.D = int(D)
        if self.b:
            root = math.isqrt(self.D)
            if root * root == self.D:
                self.a += self.b * root
                self.b = Fraction(0)
                self.D = 0
        else:
            self.D = 0

    def _lift(self, other):
        if isinstance(other, QuadValue):
            if self.b and other.b and self.D != other.D:
                raise ValueError("mixed radicands")
            return other
        return QuadValue(other)

    def __add__(self, other):
        o = self._lift(other)
        return QuadValue(self.a + o.a, self.b + o.b, self.D or o.D)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return QuadValue(self.a - o.a, self.b - o.b, self.D or o.D)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        D = self.D or o.D
        return QuadValue(self.a * o.a + self.b * o.b * D,
                         self.a * o.b + self.b * o.a, D)

    __rmul__ = __mul__

    def __neg__(self):
        return QuadValue(-self.a, -self.b, self.D)

    @property
    def is_rational(self) -> bool:
        return not self.b

    def as_fraction(self) -> Fraction:
        if self.b:
            raise ValueError(f"{self} is irrational")
        return self.a

    def sign(self) -> int:
        a, b = self.a, self.b
        if not b:
            return (a > 0) - (a < 0)
        if not a:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with b^2 D
        lhs, rhs = a * a, b * b * self.D
        if a > 0:  # b < 0
            return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
        return 1 if rhs > lhs else (-1 if rhs < lhs else 0)

    def __lt__(self, other):
        return (self - self._lift(other)).sign() < 0

    def __le__(self, other):
        return (self - self._lift(other)).sign() <= 0

    def __eq__(self, other):
        d = self - self._lift(other)
        return not d.a and not d.b

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.D)

    def __repr__(self):
        if not self.b:
            return str(self.a)
        return f"({self.a} + {self.b}*sqrt({self.D}))"


@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        if self.mu >= 1 and (self.k - self.lam - 1) * self.k != \
                (self.n - self.k - 1) * self.mu:
            raise ValueError(f"parameters {self.tuple()} violate the "
                             f"counting identity")
        if not 0 < self.k < self.n - 1:
            raise ValueError("degenerate parameter set")

    @classmethod
    def from_klm(cls, k: int, lam: int, mu: int) -> "SrgParams":
        num = k * (k - lam - 1)
        if num % mu:
            raise ValueError("n is not integral for these parameters")
        return cls(k + 1 + num // mu, k, lam, mu)

    def tuple(self):
        return (self.n, self.k, self.lam, self.mu)

    def complement(self) -> "SrgParams":
        n, k, lam, mu = self.tuple()
        return SrgParams(n, n - k - 1, n - 2 - 2 * k + mu, n - 2 * k + lam)


@dataclass
class Spectrum:
    r: QuadValue
    s: QuadValue
    f: QuadValue
    g: QuadValue
    conference: bool


def spectrum(params: SrgParams) -> Spectrum:
    n, k, lam, mu = params.tuple()
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    half = Fraction(1, 2)
    r = QuadValue(Fraction(lam - mu, 2), half, disc)
    s = QuadValue(Fraction(lam - mu, 2), -half, disc)
    conference = (n - 1) * (mu - lam) - 2 * k == 0
    if conference:
        f = QuadValue(Fraction(n - 1, 2))
        g = f
    else:
        root = math.isqrt(disc)
        if root * root != disc:
            # multiplicities are irrational: impossible as counts
            c = 2 * k + (n - 1) * (lam - mu)
            f = QuadValue(Fraction(n - 1, 2), Fraction(-c, 2 * disc), disc)
            g = QuadValue(n - 1) - f
        else:
            shift = Fraction(2 * k + (n - 1) * (lam - mu), root)
            f = QuadValue((n - 1 - shift) * half)
            g = QuadValue((n - 1 + shift) * half)
    assert QuadValue(k) + f * r + g * s == 0
    assert QuadValue(1) + f + g == n
    return Spectrum(r, s, f, g, conference)


def krein_conditions(params: SrgParams) -> tuple[bool, bool, bool, bool]:
    """(krein1 holds, krein1 is equality, krein2 holds, krein2 equality)."""
    sp = spectrum(params)
    k = QuadValue(params.k)
    r, s = sp.r, sp.s
    lhs1 = (r + 1) * (k + r + 2 * r * s)
    rhs1 = (k + r) * (s + 1) * (s + 1)
    lhs2 = (s + 1) * (k + s + 2 * r * s)
    rhs2 = (k + s) * (r + 1) * (r + 1)
    return (lhs1 <= rhs1, lhs1 == rhs1, lhs2 <= rhs2, lhs2 == rhs2)


def _sum_of_two_squares(n: int) -> bool:
    a = 0
    while a * a * 2 <= n:
        b2 = n - a * a
        r = math.isqrt(b2)
        if r * r == b2:
            return True
        a += 1
    return False


@dataclass
class FeasibilityReport:
    params: SrgParams
    integrality: bool
    krein1: bool
    krein2: bool
    krein1_equality: bool
    krein2_equality: bool
    absolute_f: bool
    absolute_g: bool
    conference_ok: bool
    conference: bool
    details: dict

    @property
    def feasible(self) -> bool:
        return (self.integrality and self.krein1 and self.krein2 and
                self.absolute_f and self.absolute_g and self.conference_ok)


def feasibility_report(params: SrgParams) -> FeasibilityReport:
    sp = spectrum(params)
    n = params.n
    kr1, eq1, kr2, eq2 = krein_conditions(params)
    details = {"r": sp.r, "s": sp.s, "f": sp.f, "g": sp.g}
    if sp.conference:
        integrality = (n - 1) % 2 == 0
        conference_ok = _sum_of_two_squares(n)
    else:
        integrality = (sp.f.is_rational and sp.g.is_rational and
                       sp.f.as_fraction().denominator == 1 and
                       sp.g.as_fraction().denominator == 1)
        conference_ok = True

    def absolute(mult: QuadValue) -> bool:
        if not mult.is_rational:
            return True
        m = mult.as_fraction()
        return n <= (m + 2) * (m + 1) / 2 - 1

    return FeasibilityReport(
        params=params, integrality=integrality, krein1=kr1, krein2=kr2,
        krein1_equality=eq1, krein2_equality=eq2,
        absolute_f=absolute(sp.f), absolute_g=absolute(sp.g),
        conference_ok=conference_ok, conference=sp.conference,
        details=details)


def design_level(params: SrgParams, eigenspace: str) -> int:
    """Strength of the projected vertex set as a spherical design: always 2,
    3 at Krein equality, 4 when the absolute bound is also tight; never 5."""
    sp = spectrum(params)
    _, eq1, _, eq2 = krein_conditions(params)
    if eigenspace == "r-space":
        attained, mult = eq1, sp.f
    elif eigenspace == "s-space":
        attained, mult = eq2, sp.g
    else:
        raise ValueError("eigenspace must be 'r-space' or 's-space'")
    if not attained:
        return 2
    if mult.is_rational:
        m = mult.as_fraction()
        if params.n == (m + 2) * (m + 1) / 2 - 1:
            return 4
    return 3


def krein_graph_params(r: int) -> SrgParams:
    """Kr(r): the triangle-free SRG attaining the second Krein bound."""
    return SrgParams((r * r + 3 * r) ** 2, r ** 3 + 3 * r * r + r, 0,
                     r * r + r)


def empty_triple_count(params: SrgParams) -> int:
    """Independent 3-sets of an SRG, straight from the 3-vertex counts."""
    n, k, lam, mu = params.tuple()
    total = n * (n - 1) * (n - 2) // 6
    triangles = n * k * lam // 6
    paths = n * k * (k - 1) // 2 - 3 * triangles
    edge_plus = n * k // 2 * (n - 2 * k + lam)
    return total - triangles - paths - edge_plus


def krein_k33_count(r: int) -> int:
    """Exact number of induced K33 in Kr(r)."""
    if r < 3:
        return 0
    params = krein_graph_params(r)
    choose_r3 = r * (r - 1) * (r - 2) // 6
    num = empty_triple_count(params) * choose_r3
    assert num % 2 == 0
    return num // 2


def tf_family_params(N: int, M: int):
    """The two-parameter triangle-free family; returns the parameter set and
    a flag when an eigenvalue multiplicity fails to be integral."""
    if not (N >= 1 and 0 <= M <= N):
        raise ValueError("need N >= 1 and 0 <= M <= N")
    k = N * (2 * N + 1 + M * (N + 1))
    mu = N * (M + 1)
    params = SrgParams.from_klm(k, 0, mu)
    rep = feasibility_report(params)
    return params, not rep.integrality


def biggs_linked_pair(N: int) -> tuple[SrgParams, SrgParams]:
    big = SrgParams.from_klm(N * (N * N + 3 * N + 1), 0, N * (N + 1))
    small = SrgParams.from_klm(N * N * (N + 2), 0, N * N)
    return big, small


KNOWN_TFSRG = [
    SrgParams(5, 2, 0, 1),
    SrgParams(10, 3, 0, 1),
    SrgParams(16, 5, 0, 2),
    SrgParams(50, 7, 0, 1),
    SrgParams(56, 10, 0, 2),
    SrgParams(77, 16, 0, 4),
    SrgParams(100, 22, 0, 6),
]
