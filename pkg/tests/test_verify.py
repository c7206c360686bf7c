import csv
import io
import random
from itertools import product

import numpy as np
import pytest

from qgcipher.modring import CompositeModulus
from qgcipher.quasigroup import NONTRIVIAL, Parastrophe, TQuasigroup
from qgcipher.verify import (
    CENSUS_COLUMNS,
    TABLE1,
    ModulusTooLarge,
    cayley,
    census,
    census_csv,
    census_summary,
    is_latin_square,
    is_medial,
    ortho_bruteforce,
    ortho_report,
    parastrophe_table,
    satisfies_birkhoff,
    table1_cells,
    table1_check,
    theorem1_check,
    translation_tables,
)

S = Parastrophe


def test_ortho_bruteforce_examples():
    A = TQuasigroup(2, 3, 0, 5)
    assert ortho_bruteforce(A, A.parastrophe(S.S13))
    for n in (2, 5, 7):
        q = TQuasigroup(1, 1, 0, n)
        assert not ortho_bruteforce(q, q)
    with pytest.raises(ModulusTooLarge):
        ortho_bruteforce(TQuasigroup(7, 12, 13, 313), TQuasigroup(182, 287, 25, 313))


def test_theorem1_examples():
    assert theorem1_check(TQuasigroup(2, 3, 0, 5), S.S13)
    assert not theorem1_check(TQuasigroup(2, 2, 0, 5), S.S12)
    with pytest.raises(ModulusTooLarge):
        theorem1_check(TQuasigroup(25, 37, 11, 313), S.S13)
    with pytest.raises(ValueError):
        theorem1_check(TQuasigroup(2, 3, 0, 5), S.E)


def test_parastrophe_table_matches_closed_form():
    rng = random.Random(0)
    for _ in range(30):
        n = rng.choice([5, 7, 9, 11])
        q = TQuasigroup(rng.choice([1, 2, 4]), rng.choice([1, 2, 4]), rng.randrange(n), n)
        for s in Parastrophe:
            assert np.array_equal(parastrophe_table(cayley(q), s), q.parastrophe(s).cayley_table())


@pytest.mark.parametrize("n", [3, 5, 7])
def test_three_way_agreement_composite_and_prime(n):
    for phi, psi, c in product(range(1, n), range(1, n), (0, 1)):
        q = TQuasigroup(phi, psi, c, n)
        for s in NONTRIVIAL:
            assert q.ortho_to_parastrophe(s) == ortho_bruteforce(q, q.parastrophe(s)) == theorem1_check(q, s)


@pytest.mark.parametrize("n", [4, 8, 9])
def test_closed_form_agreement_composite(n):
    units = [u for u in range(1, n) if np.gcd(u, n) == 1]
    for phi, psi in product(units, repeat=2):
        q = TQuasigroup(phi, psi, 1, n)
        r = ortho_report(q)
        assert r.agreement, (phi, psi, r)


def test_table1_examples():
    assert table1_check(TQuasigroup(2, 3, 1, 5))
    assert table1_check(TQuasigroup(1, 1, 0, 5))
    cells = table1_cells(TQuasigroup(2, 3, 1, 5))
    assert len(cells) == 36
    assert TABLE1["R"]["12"] == "L" and cells["R", "12"]
    with pytest.raises(ModulusTooLarge):
        table1_check(TQuasigroup(1, 1, 0, 37))


def test_table1_detects_wrong_entry():
    q = TQuasigroup(2, 3, 1, 7)
    t = cayley(q)
    lhs = translation_tables(parastrophe_table(t, S.S13), "R")
    assert np.array_equal(lhs, translation_tables(t, "R-1"))
    assert not np.array_equal(lhs, translation_tables(t, "L-1"))


def test_translation_tables_definitions():
    q = TQuasigroup(3, 5, 2, 7)
    t = cayley(q)
    for a, x in product(range(7), repeat=2):
        assert translation_tables(t, "L")[a, x] == q(a, x)
        assert translation_tables(t, "R")[a, x] == q(x, a)
        assert q(x, translation_tables(t, "P")[a, x]) == a
        assert translation_tables(t, "R-1")[a, q(x, a)] == x


def test_latin_medial_birkhoff():
    q = TQuasigroup(3, 5, 2, 7)
    assert is_latin_square(cayley(q))
    assert is_medial(q)
    assert satisfies_birkhoff(q)
    assert not is_latin_square(np.zeros((3, 3), dtype=int))


def test_non_medial_table_detected():
    # the non-associative loop of order 5
    t = np.array([[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]])
    assert is_latin_square(t)
    assert not is_medial(t)
    assert is_medial(np.array([[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]))


def test_census_counts():
    # counts from a standalone enumeration of the eight conditions and of
    # brute-force orthogonality to all five parastrophes
    assert census_summary(census(5)) == {
        "pairs": 16, "orthogonal_to_all": 0, "corollary1_pass": 0, "disagreements": 0,
    }
    assert census_summary(census(7)) == {
        "pairs": 36, "orthogonal_to_all": 10, "corollary1_pass": 10, "disagreements": 0,
    }
    rows = census(3)
    (row,) = [r for r in rows if (r.k, r.m) == (1, 1)]
    assert not row.corollary1_pass


def test_census_errors():
    with pytest.raises(CompositeModulus):
        census(9)
    with pytest.raises(ModulusTooLarge):
        census(37)


def test_census_csv():
    text = census_csv(census(7))
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == CENSUS_COLUMNS
    assert len(rows) == 37
    assert all(len(r) == 8 for r in rows)


def test_example_quasigroup_passes_census_conditions():
    q = TQuasigroup(25, 37, 0, 313)
    assert q.corollary1_check().passed
    assert all(q.ortho_to_parastrophe(s) for s in NONTRIVIAL)
