"""Permutation algebra and label order tests."""

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from maps.labels import bicellular_order, default_order, parse_label, unicellular_order
from maps.permutation import Permutation, compose, cycles, inverse, is_fpf_involution
from utils.errors import StructuralError


def permutations(max_size=20):
    def build(size):
        labels = list(range(1, size + 1))
        return st.permutations(labels).map(lambda images: Permutation(dict(zip(labels, images)), labels))
    return st.integers(min_value=1, max_value=max_size).flatmap(build)


def same_size_triple(max_size=20):
    def build(size):
        labels = list(range(1, size + 1))
        perm = st.permutations(labels).map(lambda images: Permutation(dict(zip(labels, images)), labels))
        return st.tuples(perm, perm, perm)
    return st.integers(min_value=1, max_value=max_size).flatmap(build)


class TestLabels:
    def test_unicellular_order(self):
        assert unicellular_order(2) == ("L", 1, 2, 3, 4, "R")
        assert unicellular_order(0) == ("L", "R")

    def test_bicellular_order(self):
        assert bicellular_order(2, 1) == ("L1", 1, "R1", "L2", 2, 3, 4, "R2")

    def test_default_order_unicellular(self):
        assert default_order({3, "R", 1, "L", 2, 4}) == ("L", 1, 2, 3, 4, "R")

    def test_parse_label(self):
        assert parse_label(" 12 ") == 12
        assert parse_label("L2") == "L2"
        with pytest.raises(ValueError):
            parse_label("0")
        with pytest.raises(ValueError):
            parse_label("X")


class TestPermutation:
    def test_compose_is_right_to_left(self):
        order = (1, 2, 3)
        p = Permutation.from_cycles([(1, 2)], order)
        q = Permutation.from_cycles([(2, 3)], order)
        r = compose(p, q)
        # r(2) = p(q(2)) = p(3) = 3
        assert r(2) == 3
        assert r(3) == p(2) == 1

    def test_from_cycles_fixes_unmentioned(self):
        p = Permutation.from_cycles([(1, 3)], (1, 2, 3))
        assert p(2) == 2

    def test_repeated_label_rejected(self):
        with pytest.raises(StructuralError):
            Permutation.from_cycles([(1, 2), (2, 3)])

    def test_not_a_bijection(self):
        with pytest.raises(StructuralError):
            Permutation({1: 2, 2: 2})

    def test_unknown_label(self):
        p = Permutation.identity((1, 2))
        with pytest.raises(StructuralError):
            p(5)

    def test_compose_different_label_sets(self):
        with pytest.raises(StructuralError):
            compose(Permutation.identity((1, 2)), Permutation.identity((1, 2, 3)))

    def test_cycles_in_ambient_order(self):
        order = unicellular_order(2)
        sigma = Permutation.from_cycles([(4, "L", 3, 2, 1)], order)
        assert cycles(sigma) == [["L", 3, 2, 1, 4], ["R"]]

    def test_repr(self):
        p = Permutation.from_cycles([(1, 2)], (1, 2, 3))
        assert repr(p) == "Permutation((1,2)(3))"

    def test_fpf_involution(self):
        order = unicellular_order(1)
        assert is_fpf_involution(Permutation.from_cycles([(1, 2), ("L", "R")], order))
        assert not is_fpf_involution(Permutation.from_cycles([(1, 2)], order))
        assert not is_fpf_involution(Permutation.from_cycles([(1, 2, "L", "R")], order))


class TestPermutationProperties:
    @given(permutations())
    @settings(max_examples=100)
    def test_inverse_cancels(self, p):
        identity = Permutation.identity(p.order)
        assert compose(p, inverse(p)) == identity
        assert compose(inverse(p), p) == identity

    @given(permutations())
    @settings(max_examples=100)
    def test_inverse_is_an_involution(self, p):
        assert inverse(inverse(p)) == p

    @given(same_size_triple())
    @settings(max_examples=100)
    def test_associative(self, triple):
        p, q, r = triple
        assert compose(compose(p, q), r) == compose(p, compose(q, r))

    @given(permutations())
    @settings(max_examples=100)
    def test_cycles_partition_and_rebuild(self, p):
        cs = cycles(p)
        flat = [x for c in cs for x in c]
        assert sorted(flat) == list(p.order)
        assert all(c[0] == min(c) for c in cs)
        assert [c[0] for c in cs] == sorted(c[0] for c in cs)
        assert Permutation.from_cycles(cs, p.order) == p
