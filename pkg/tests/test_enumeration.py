"""Enumerators, count tables and the numerical checks built on them."""

import pytest

from bijections.beta import Bi, Pair
from config.constants import CountKind, MapClass, SplitRange
from enumeration.counts import CountTable, catalan_numbers, count_table
from enumeration.generators import enumerate_bicellular, enumerate_decompositions, enumerate_unicellular
from enumeration.matchings import double_factorial, first_partners, perfect_matchings
from enumeration.verify import is_connected, pair_sum, verify_bijection, verify_recursion
from maps.bicellular import canonical_faces, has_cross_pair
from maps.labels import bicellular_order
from maps.permutation import Permutation, compose
from utils.errors import InvariantViolation


@pytest.fixture(scope="module")
def table5():
    return count_table(5)


class TestMatchings:
    def test_lexicographic(self):
        assert list(perfect_matchings(range(1, 5))) == [
            ((1, 2), (3, 4)),
            ((1, 3), (2, 4)),
            ((1, 4), (2, 3)),
        ]

    def test_counts(self):
        for n in range(5):
            assert len(list(perfect_matchings(range(1, 2 * n + 1)))) == double_factorial(2 * n - 1)

    def test_first_partner_partition(self):
        points = range(1, 7)
        merged = [m for p in first_partners(3) for m in perfect_matchings(points, p)]
        assert merged == list(perfect_matchings(points))
        assert first_partners(0) == [None]


class TestEnumerators:
    def test_unicellular_in_lexicographic_order(self):
        maps = list(enumerate_unicellular(2))
        assert [u.pairs() for u in maps] == [((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3))]

    def test_genus_filter(self):
        assert [u.pairs() for u in enumerate_unicellular(2, genus=1)] == [((1, 3), (2, 4))]

    def test_bicellular_two_edges(self):
        maps = list(enumerate_bicellular(2))
        assert len(maps) == 8
        assert [b.m for b in maps] == [1, 1, 1, 2, 2, 3, 3, 3]
        # A 2-edge bicellular map with two vertices and genus 0.
        assert any(len(b.vertices()) == 2 and b.genus == 0 for b in maps)

    def test_strict_split(self):
        assert len(list(enumerate_bicellular(2, split_range=SplitRange.STRICT))) == 2
        assert list(enumerate_bicellular(1, split_range=SplitRange.STRICT)) == []

    def test_deterministic(self):
        assert list(enumerate_bicellular(3)) == list(enumerate_bicellular(3))

    def test_decompositions_order(self, single_arc):
        xs = list(enumerate_decompositions(3, 1))
        assert len(xs) == 10
        assert all(isinstance(x, Pair) for x in xs[:2])
        assert all(isinstance(x, Bi) for x in xs[2:])
        assert xs[0].u1.n == 0 and xs[0].u2.genus == 1
        assert xs[1].u1.genus == 1 and xs[1].u2.n == 0


class TestConnectivity:
    def test_cross_pair_iff_connected(self):
        for n in range(1, 4):
            for m in range(1, 2 * n):
                order = bicellular_order(n, m)
                for matching in perfect_matchings(range(1, 2 * n + 1)):
                    beta = Permutation.from_cycles([*matching, ("L1", "R1"), ("L2", "R2")], order)
                    tau = compose(beta, canonical_faces(n, m))
                    assert is_connected(beta, tau) == has_cross_pair(m, matching)


class TestCountTable:
    def test_catalan_row(self, table5):
        assert [table5.c(0, n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
        assert catalan_numbers(5) == [1, 1, 2, 5, 14, 42]

    def test_spot_values(self, table5):
        assert table5.c(1, 2) == 1
        assert table5.c(1, 3) == 10
        assert table5.c(2, 4) == 21
        assert table5.c2(0, 1) == 1
        assert table5.c2(0, 2) == 8

    def test_rows_sum_to_matchings(self, table5):
        for n in range(6):
            assert sum(table5.c(g, n) for g in range(n // 2 + 1)) == double_factorial(2 * n - 1)

    def test_out_of_range(self, table5):
        assert table5.c(1, 1) == 0
        assert table5.c(-1, 3) == 0
        with pytest.raises(KeyError):
            table5.c(0, 6)
        with pytest.raises(KeyError):
            table5.c2(0, 6)

    def test_rows(self):
        table = CountTable(1, 1, uni={(0, 0): 1, (0, 1): 1}, bi={(0, 1): 1})
        assert table.rows() == [
            (0, 0, 1, CountKind.UNICELLULAR),
            (0, 1, 1, CountKind.UNICELLULAR),
            (0, 1, 1, CountKind.BICELLULAR),
        ]

    def test_workers_match_serial(self):
        assert count_table(4, workers=2) == count_table(4)

    def test_pair_sum(self, table5):
        assert pair_sum(table5, 0, 2) == 2


class TestVerifyRecursion:
    def test_passes_up_to_five(self, table5):
        report = verify_recursion(5, table=table5)
        assert report.passed
        assert report.catalan_ok
        assert len(report.cells) == 6
        cell = report.cells[1]
        assert (cell.g, cell.n, cell.lhs_pairs, cell.lhs_bicellular, cell.rhs) == (0, 2, 2, 8, 10)

    def test_strict_split_fails(self):
        report = verify_recursion(4, split_range=SplitRange.STRICT)
        assert not report.passed
        failing = {(c.g, c.n) for c in report.cells if not c.passed}
        assert (0, 1) in failing
        assert (0, 2) in failing
        cell = next(c for c in report.cells if (c.g, c.n) == (0, 2))
        assert cell.lhs_bicellular == 2

    @pytest.mark.slow
    def test_passes_up_to_six(self):
        report = verify_recursion(6, workers=2)
        assert report.passed
        assert len(report.cells) == 9


class TestVerifyBijection:
    def test_three_edges_genus_one(self):
        report = verify_bijection(3, 1)
        assert report.passed, report.failures
        assert report.class_tallies[MapClass.III.value] == 2
        assert report.class_tallies[MapClass.I.value] == report.class_tallies[MapClass.BI.value]
        assert report.class_tallies[MapClass.II.value] == report.class_tallies[MapClass.BII.value]
        cell = report.cells[0]
        assert (cell.g, cell.n, cell.lhs_pairs, cell.lhs_bicellular, cell.rhs) == (0, 2, 2, 8, 10)

    def test_class_mismatch_from_planting_is_reported(self, monkeypatch):
        import enumeration.verify as verify

        def broken(b):
            raise InvariantViolation(f"eta sent {b} to the wrong class")
        monkeypatch.setattr(verify, "eta_restricted", broken)
        report = verify_bijection(3, 1)
        assert not report.passed
        assert any("wrong class" in failure for failure in report.failures)

    @pytest.mark.parametrize("n, g", [(2, 1), (4, 1), (4, 2), (5, 1), (5, 2)])
    def test_small_sizes(self, n, g):
        assert verify_bijection(n, g).passed

    @pytest.mark.slow
    @pytest.mark.parametrize("g", [1, 2, 3])
    def test_six_edges(self, g):
        assert verify_bijection(6, g, workers=2).passed
