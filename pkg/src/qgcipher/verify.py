"""Exhaustive oracles for small moduli.

Everything here works from Cayley tables and counts solutions directly, so it
shares no arithmetic shortcuts with the closed-form predicates it is used to
check.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .modring import CompositeModulus, Modulus, is_unit_mod
from .quasigroup import NONTRIVIAL, Kind, Parastrophe, TQuasigroup

MAX_BRUTE = 101
MAX_TABLE1 = 31


class ModulusTooLarge(ValueError):
    pass


def _guard(n: int, limit: int) -> None:
    if n > limit:
        raise ModulusTooLarge(f"modulus {n} exceeds exhaustive limit {limit}")


def cayley(q: TQuasigroup) -> np.ndarray:
    """Cayley table by direct evaluation of every product."""
    n = q.n
    return np.array([[q(x, y) for y in range(n)] for x in range(n)], dtype=np.int64)


def is_latin_square(t: np.ndarray) -> bool:
    n = t.shape[0]
    full = np.arange(n)
    return all(
        np.array_equal(np.sort(t[i, :]), full) and np.array_equal(np.sort(t[:, i]), full)
        for i in range(n)
    )


def parastrophe_table(t: np.ndarray, s: Parastrophe | str) -> np.ndarray:
    """Parastrophe of a Latin square by relabelling the triples ``(x1, x2, x3)``."""
    s = Parastrophe(s)
    n = t.shape[0]
    x1, x2 = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    x3 = t
    # (row, col, value) roles for each parastrophe
    roles = {
        Parastrophe.E: (x1, x2, x3),
        Parastrophe.S12: (x2, x1, x3),
        Parastrophe.S13: (x3, x2, x1),
        Parastrophe.S23: (x1, x3, x2),
        Parastrophe.S123: (x2, x3, x1),
        Parastrophe.S132: (x3, x1, x2),
    }[s]
    out = np.full((n, n), -1, dtype=np.int64)
    out[roles[0], roles[1]] = roles[2]
    if (out < 0).any():
        raise ValueError("table is not a Latin square")
    return out


def tables_orthogonal(a: np.ndarray, b: np.ndarray) -> bool:
    n = a.shape[0]
    return bool(np.unique(a * n + b).size == n * n)


def ortho_bruteforce(A: TQuasigroup, B: TQuasigroup) -> bool:
    """Every right-hand side ``(a, b)`` has exactly one solution ``(x, y)``."""
    if A.n != B.n:
        raise ValueError("operations over different moduli")
    _guard(A.n, MAX_BRUTE)
    n = A.n
    counts = np.zeros(n * n, dtype=np.int64)
    np.add.at(counts, (cayley(A) * n + cayley(B)).ravel(), 1)
    return bool((counts == 1).all())


def left_division_table(t: np.ndarray) -> np.ndarray:
    """``d[x, z]`` = the ``y`` with ``t[x, y] == z``."""
    n = t.shape[0]
    d = np.empty_like(t)
    rows = np.repeat(np.arange(n), n)
    d[rows, t.ravel()] = np.tile(np.arange(n), n)
    return d


def _identity_map(t: np.ndarray, s: Parastrophe) -> np.ndarray:
    """``f[x, z]`` whose injectivity in ``x`` (for each ``z``) characterizes ``A`` orthogonal to ``A^s``."""
    n = t.shape[0]
    x = np.arange(n)[:, None]
    z = np.arange(n)[None, :]
    if s is Parastrophe.S12:
        return t[left_division_table(t)[x, z], x]  # (x\z)x
    if s is Parastrophe.S13:
        return t[t[z, x], x]  # zx.x
    if s is Parastrophe.S23:
        return t[x, t[x, z]]  # x.xz
    if s is Parastrophe.S123:
        return t[x, t[z, x]]  # x.zx
    return t[t[x, z], x]  # xz.x


def theorem1_check(A: TQuasigroup, s: Parastrophe | str) -> bool:
    """Cancellation identity ``f(x, z) == f(y, z) => x == y`` for all ``x, y, z``."""
    s = Parastrophe(s)
    if s is Parastrophe.E:
        raise ValueError("no identity criterion for the trivial parastrophe")
    _guard(A.n, MAX_BRUTE)
    f = _identity_map(cayley(A), s)
    n = A.n
    return all(np.unique(f[:, z]).size == n for z in range(n))


# Table of which translation of q equals a given translation of a parastrophe:
# TABLE1[row][parastrophe] with rows R, L, P and their inverses.
TABLE1 = {
    "R": {"e": "R", "12": "L", "13": "R-1", "23": "P", "123": "P-1", "132": "L-1"},
    "L": {"e": "L", "12": "R", "13": "P-1", "23": "L-1", "123": "R-1", "132": "P"},
    "P": {"e": "P", "12": "P-1", "13": "L-1", "23": "R", "123": "L", "132": "R-1"},
    "R-1": {"e": "R-1", "12": "L-1", "13": "R", "23": "P-1", "123": "P", "132": "L"},
    "L-1": {"e": "L-1", "12": "R-1", "13": "P", "23": "L", "123": "R", "132": "P-1"},
    "P-1": {"e": "P-1", "12": "P", "13": "L", "23": "R-1", "123": "L-1", "132": "R"},
}


def translation_tables(t: np.ndarray, name: str) -> np.ndarray:
    """``T[a, x]`` for the named translation of the operation table ``t`` (``"R"``, ``"P-1"``, ...)."""
    n = t.shape[0]
    kind = name[0]
    if kind == "L":
        T = t.copy()
    elif kind == "R":
        T = t.T.copy()
    else:
        # P_a x = y with x*y = a
        T = np.empty_like(t)
        x = np.repeat(np.arange(n), n)
        y = np.tile(np.arange(n), n)
        T[t[x, y], x] = y
    if name.endswith("-1"):
        inv = np.empty_like(T)
        rows = np.repeat(np.arange(n), n)
        inv[rows, T.ravel()] = np.tile(np.arange(n), n)
        T = inv
    return T


def table1_cells(q: TQuasigroup) -> dict[tuple[str, str], bool]:
    _guard(q.n, MAX_TABLE1)
    base = cayley(q)
    out = {}
    for row, cols in TABLE1.items():
        for s, entry in cols.items():
            lhs = translation_tables(parastrophe_table(base, s), row)
            out[row, s] = bool(np.array_equal(lhs, translation_tables(base, entry)))
    return out


def table1_check(q: TQuasigroup) -> bool:
    return all(table1_cells(q).values())


def is_medial(q: TQuasigroup | np.ndarray) -> bool:
    """``xy.uv == xu.yv`` for all ``x, y, u, v`` (O(n^4) memory; keep n small)."""
    t = cayley(q) if isinstance(q, TQuasigroup) else np.asarray(q)
    n = t.shape[0]
    x, y, u, v = np.ix_(*(np.arange(n),) * 4)
    return bool(np.array_equal(t[t[x, y], t[u, v]], t[t[x, u], t[y, v]]))


def satisfies_birkhoff(q: TQuasigroup) -> bool:
    t = cayley(q)
    n = q.n
    ld = left_division_table(t)  # x\y
    rd = left_division_table(t.T).T  # y/x as rd[y, x]
    x, y = np.ix_(np.arange(n), np.arange(n))
    ids = [
        t[x, ld[x, y]] == y,
        t[rd[y, x], x] == y,
        ld[x, t[x, y]] == y,
        rd[t[y, x], x] == y,
        rd[x, ld[y, x]] == y,
        ld[rd[x, y], x] == y,
    ]
    return all(bool(np.all(i)) for i in ids)


@dataclass(frozen=True)
class OrthoReport:
    predicate: dict[str, bool]
    bruteforce: dict[str, bool]

    @property
    def agreement(self) -> bool:
        return self.predicate == self.bruteforce

    @property
    def all_orthogonal(self) -> bool:
        return all(self.bruteforce.values())


def ortho_report(q: TQuasigroup) -> OrthoReport:
    _guard(q.n, MAX_BRUTE)
    t = cayley(q)
    pred = {s.value: q.ortho_to_parastrophe(s) for s in NONTRIVIAL}
    # parastrophes by relabelling the table, independent of the closed forms
    brute = {s.value: tables_orthogonal(t, parastrophe_table(t, s)) for s in NONTRIVIAL}
    return OrthoReport(pred, brute)


@dataclass(frozen=True)
class CensusRow:
    k: int
    m: int
    report: OrthoReport
    corollary1_pass: bool


CENSUS_COLUMNS = ["k", "m", "s12", "s13", "s23", "s123", "s132", "corollary1_pass"]


def census(n: int | Modulus) -> list[CensusRow]:
    """Orthogonality of ``k*x + m*y`` to each parastrophe, for every unit pair ``(k, m)``."""
    n = n.n if isinstance(n, Modulus) else int(n)
    if not Modulus(n).is_prime:
        raise CompositeModulus(f"modulus {n} is not prime")
    _guard(n, MAX_TABLE1)
    rows = []
    for k in range(1, n):
        for m in range(1, n):
            if not (is_unit_mod(k, n) and is_unit_mod(m, n)):
                continue
            q = TQuasigroup(k, m, 0, n)
            rows.append(CensusRow(k, m, ortho_report(q), q.corollary1_check().passed))
    return rows


def census_summary(rows: list[CensusRow]) -> dict[str, int]:
    return {
        "pairs": len(rows),
        "orthogonal_to_all": sum(r.report.all_orthogonal for r in rows),
        "corollary1_pass": sum(r.corollary1_pass for r in rows),
        "disagreements": sum(not r.report.agreement for r in rows),
    }


def census_csv(rows: list[CensusRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CENSUS_COLUMNS)
    for r in rows:
        b = r.report.bruteforce
        w.writerow([r.k, r.m, *(int(b[s.value]) for s in NONTRIVIAL), int(r.corollary1_pass)])
    return buf.getvalue()


def inverse_by_search(F, a: int, b: int) -> tuple[int, int]:
    """Solve ``F(x, y) == (a, b)`` by scanning all of Z_n x Z_n."""
    n = F.n
    hits = [(x, y) for x in range(n) for y in range(n) if F.forward(x, y) == (a, b)]
    if len(hits) != 1:
        raise ValueError(f"{len(hits)} solutions for {(a, b)}")
    return hits[0]


def translation_by_search(q: TQuasigroup, kind: Kind | str, leader: int, x: int) -> int:
    """``translate`` evaluated from the definition by scanning candidates."""
    kind = Kind(kind)
    if kind is Kind.L:
        return q(leader, x)
    if kind is Kind.R:
        return q(x, leader)
    (y,) = [y for y in range(q.n) if q(x, y) == leader]
    return y
