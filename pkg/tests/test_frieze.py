import pytest

from friezelotus.contfrac import Rational, hj_expand
from friezelotus.frieze import (complete_quiddity, entry_by_continuant,
                                frieze_from_quiddity, frieze_of_triangulation,
                                triangulation_of_frieze)
from friezelotus.polygon import enumerate_triangulations, polygon_of_cf, quiddity_of

from conftest import coprime_pairs

RUNNING_QUIDDITY = (1, 2, 2, 3, 2, 1, 3, 4)

# the full fundamental domain of the width-5 frieze with the quiddity above
RUNNING_DOMAIN = {
    (0, 1): 1, (1, 2): 1, (2, 3): 1, (3, 4): 1, (4, 5): 1, (5, 6): 1, (6, 7): 1, (0, 7): 1,
    (0, 2): 2, (1, 3): 2, (2, 4): 3, (3, 5): 2, (4, 6): 1, (5, 7): 3, (0, 6): 4, (1, 7): 1,
    (0, 3): 3, (1, 4): 5, (2, 5): 5, (3, 6): 1, (4, 7): 2, (0, 5): 11, (1, 6): 3, (2, 7): 1,
    (0, 4): 7, (1, 5): 8, (2, 6): 2, (3, 7): 1,
}


def test_running_frieze_fundamental_domain():
    f = frieze_from_quiddity(RUNNING_QUIDDITY)
    assert len(f.entries) == 28
    assert f.entries == RUNNING_DOMAIN


def test_running_frieze_n_q_entries():
    f = frieze_from_quiddity(RUNNING_QUIDDITY)
    assert f.entry(0, 5) == 11
    assert f.entry(1, 5) == 8


def test_entry_normalisation():
    f = frieze_from_quiddity(RUNNING_QUIDDITY)
    assert f.entry(3, 3) == 0
    assert f.entry(3, 3 + f.m) == 0
    assert f.entry(-2, 0) == f.entry(6, 8) == f.entry(0, 6)
    for (i, j), v in RUNNING_DOMAIN.items():
        assert f.entry(i + f.m, j + f.m) == v
        assert f.entry(j, i + f.m) == v  # glide


def test_width_zero_frieze():
    f = frieze_from_quiddity((1, 1, 1))
    assert f.width == 0
    assert f.entries == {(0, 1): 1, (1, 2): 1, (0, 2): 1}


def test_fountain_frieze_rows():
    f = frieze_from_quiddity((6, 1, 2, 2, 2, 2, 2, 1))
    assert max(f.entries.values()) == 6
    # cyclic content of the printed rows
    assert f.row(2) == [1, 2, 2, 2, 2, 2, 1, 6]
    assert f.row(3) == [1, 3, 3, 3, 3, 1, 5, 5]
    assert f.row(4) == [1, 4, 4, 4, 1, 4, 4, 4]


def test_rejects_non_quiddity_with_diamond_diagnostic():
    with pytest.raises(ValueError, match="diamond"):
        frieze_from_quiddity((2, 2, 2, 2))
    with pytest.raises(ValueError, match="not positive"):
        frieze_from_quiddity((1, 0, 1))
    with pytest.raises(ValueError):
        frieze_from_quiddity((1, 1))


def test_diamond_rule_exhaustive():
    # diamonds whose four corners stay inside rows 0..m have tops in
    # rows 0..m-2
    for m in range(3, 10):
        for t in enumerate_triangulations(m):
            f = frieze_of_triangulation(t)
            for i in range(m):
                for d in range(0, m - 1):
                    j = i + d
                    assert (f.entry(i - 1, j) * f.entry(i, j + 1)
                            - f.entry(i, j) * f.entry(i - 1, j + 1)) == 1


def test_entries_are_continuants():
    for m in range(3, 10):
        for t in enumerate_triangulations(m):
            f = frieze_of_triangulation(t)
            q = f.quiddity
            for i in range(m):
                for j in range(i + 1, i + m + 1):
                    assert f.entry(i, j) == entry_by_continuant(q, i, j)


def test_ones_are_exactly_edges_and_diagonals():
    for m in range(4, 9):
        for t in enumerate_triangulations(m):
            f = frieze_of_triangulation(t)
            ones = {(i, j) for (i, j), v in f.entries.items()
                    if v == 1 and 2 <= j - i <= m - 2}
            expected = {(a - 1, b - 1) for a, b in t.diagonals}
            assert ones == expected


def test_bijection_with_triangulations():
    for m in range(3, 10):
        for t in enumerate_triangulations(m):
            assert triangulation_of_frieze(frieze_of_triangulation(t)) == t


def test_n_q_in_frieze_for_all_small_fractions():
    for n, q in coprime_pairs(60):
        terms = hj_expand(Rational(n, q))
        f = frieze_of_triangulation(polygon_of_cf(terms))
        r = len(terms)
        assert f.entry(0, r + 1) == n
        assert f.entry(1, r + 1) == q


def test_complete_quiddity_running():
    assert complete_quiddity((2, 2, 3, 2, 1, 3)) == (2, 2, 3, 2, 1, 3, 4, 1)


def test_complete_quiddity_trivial_and_fan():
    assert complete_quiddity((1,)) == (1, 1, 1)
    assert complete_quiddity((6, 1, 2, 2, 2, 2)) == (6, 1, 2, 2, 2, 2, 2, 1)


def test_complete_quiddity_recovers_every_small_frieze():
    for m in range(3, 9):
        for t in enumerate_triangulations(m):
            q = quiddity_of(t)
            assert complete_quiddity(q[:m - 2]) == q


def test_complete_quiddity_rejects_unextendable_prefix():
    with pytest.raises(ValueError):
        complete_quiddity((1, 1, 5, 1))
