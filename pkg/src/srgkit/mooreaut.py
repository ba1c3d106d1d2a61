"""Congruence constraints on automorphisms of srg(3250,57,0,1).

The base table of admissible (a0, p, a1) triples comes from the literature
and is shipped verbatim; the order-7 refinement intersects its arithmetic
progressions with the multiples of 49 forced by the C7-orbit count.
"""

from __future__ import annotations

import io
import csv
from dataclasses import dataclass

from .solve import SolutionTable, residues_mod

MOORE_N = 3250


@dataclass(frozen=True)
class BaseRow:
    """One row 'a1 = base + step*m <= cap' of admissible a1 values.

    cap == base with step 0 encodes a single admissible value; the row
    (a0=1, p=3) is stored verbatim as '27+45k = 0' even though its intended
    reading is unclear.
    """
    a0: int
    p: int
    base: int
    step: int
    cap: int
    note: str = ""

    def values(self) -> list[int]:
        if self.step == 0:
            return [self.base]
        out = []
        v = self.base
        while v <= self.cap:
            out.append(v)
            v += self.step
        return out


BASE_TABLE = [
    BaseRow(0, 5, 50, 75, 500),
    BaseRow(0, 13, 65, 195, 500),
    BaseRow(1, 3, 27, 45, 0, note="stored verbatim: '27+45k = 0'"),
    BaseRow(1, 19, 57, 285, 500),
    BaseRow(5, 5, 10, 75, 500),
    BaseRow(5, 11, 55, 165, 500),
    BaseRow(10, 3, 0, 0, 0),
    BaseRow(50, 5, 25, 75, 350),
    BaseRow(56, 2, 112, 0, 112),
    BaseRow(2, 7, 49, 105, 500),
    BaseRow(9, 7, 98, 105, 500),
    BaseRow(16, 7, 42, 105, 500),
    BaseRow(23, 7, 91, 105, 500),
    BaseRow(30, 7, 35, 105, 500),
    BaseRow(37, 7, 84, 105, 392),
    BaseRow(44, 7, 28, 105, 260),
    BaseRow(51, 7, 77, 0, 77),
]


def counts_mod_p(table: SolutionTable, order: int, p: int):
    """Residues mod p of every order-`order` count of the Moore table."""
    return residues_mod(table, p, order)


def orbit_constraint_order7(a1: int) -> bool:
    """A 7-orbit decomposition has 3*a1/7 cyclic orbits, which must be a
    multiple of 7; equivalently 49 | a1."""
    if a1 < 0:
        raise ValueError("a1 must be nonnegative")
    return a1 % 49 == 0


def refined_order7_table() -> list[tuple[int, int | None]]:
    """Surviving a1 per fixed-point count a0 for an order-7 automorphism."""
    out = []
    for row in BASE_TABLE:
        if row.p != 7:
            continue
        surv = [v for v in row.values() if orbit_constraint_order7(v)]
        assert len(surv) <= 1
        out.append((row.a0, surv[0] if surv else None))
    return out


@dataclass
class PetersenFreeReport:
    p: int
    residues: dict
    nonzero: list
    note: str


PETERSEN_FREE_NOTE = (
    "Residues are evidence only: concluding that a Petersen-free "
    "srg(3250,57,0,1) admits no order-3 automorphism, nor an order-5 "
    "automorphism fixing a Hoffman-Singleton subgraph, needs the "
    "fixed-substructure case analysis, which is not automated here.")


def petersen_free_congruences(table: SolutionTable, p: int,
                              orders=None) -> PetersenFreeReport:
    """Counts mod p with the Petersen parameter set to zero.

    Nonzero residues mark graphs that must have fixed copies under any
    order-p automorphism (they cannot split into p-tuples alone)."""
    residues = {}
    nonzero = []
    if orders is None:
        orders = [o for o in table.counts if o >= 3]
    for o in orders:
        for key, (c0, coeffs) in residues_mod(table, p, o).items():
            # Petersen symbol := 0 drops all coefficient terms
            residues[key] = c0
            if c0 % p:
                nonzero.append(key)
    return PetersenFreeReport(p=p, residues=residues, nonzero=nonzero,
                              note=PETERSEN_FREE_NOTE)


def base_table_csv() -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["a0", "p", "a1_base", "a1_step", "a1_cap", "note"])
    for r in BASE_TABLE:
        w.writerow([r.a0, r.p, r.base, r.step, r.cap, r.note])
    return buf.getvalue()


def refined_table_markdown() -> str:
    lines = ["| a0 | a1 |", "| -- | -- |"]
    for a0, a1 in refined_order7_table():
        lines.append(f"| {a0} | {a1 if a1 is not None else '-'} |")
    return "\n".join(lines) + "\n"
