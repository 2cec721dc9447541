"""Tests for exponent tables, chains and discrete equivalence."""

from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from algebra import koszul, parse_laurent, rescale_summand
from exponents import (Chain, ExponentTable, chains, close_under_chains, discrete_equivalent,
                       exponent_table, info, max_chain_length)
from exponents.equivalence import _Matcher

E1, E2, E3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
ZERO = (0, 0, 0)


@st.composite
def label_offsets(draw, labels=("11", "10", "01", "00"), n=3):
    """Independent lattice translations per basis label."""
    seed = draw(st.integers(min_value=0, max_value=2**31 - 1))
    rng = np.random.RandomState(seed)
    return {label: tuple(int(x) for x in rng.randint(-2, 3, size=n)) for label in labels}


@st.composite
def gap_one_data(draw):
    """Labels in degrees -3..0 with random gap-1 exponent sets in one to three variables."""
    seed = draw(st.integers(min_value=0, max_value=2**31 - 1))
    rng = np.random.RandomState(seed)
    n = int(rng.randint(1, 4))
    degrees = {}
    for degree in range(-int(rng.randint(1, 4)), 1):
        for index in range(rng.randint(1, 4)):
            degrees[f"d{-degree}_{index}"] = degree
    gap_one = {}
    for i in degrees:
        for j in degrees:
            if degrees[i] == degrees[j] + 1:
                gap_one[(i, j)] = {tuple(int(e) for e in rng.randint(-2, 3, size=n))
                                   for _ in range(rng.randint(0, 3))}
    return n, list(degrees), degrees, gap_one


def path_sums(degrees, gap_one, i, j):
    """Sums of gap-1 exponents along every degree-one path from j up to i."""
    if degrees[i] == degrees[j] + 1:
        return set(gap_one.get((i, j), ()))
    sums = set()
    for l in degrees:
        if degrees[l] != degrees[j] + 1:
            continue
        for first in gap_one.get((l, j), ()):
            for rest in path_sums(degrees, gap_one, i, l):
                sums.add(tuple(a + b for a, b in zip(first, rest)))
    return sums


def counted_chains(table, k):
    """Sum over index sequences of the product of the exponent set sizes along them."""
    total = 0
    for path in product(table.labels, repeat=k + 1):
        count = 1
        for j, i in zip(path, path[1:]):
            count *= len(table.get(i, j))
        total += count
    return total


class TestExponentTable:

    def test_origami_gap_one(self, origami):
        F, _ = origami
        table = exponent_table(F)
        assert table.get("10", "11") == frozenset({ZERO, E3, (1, 1, 0)})
        assert table.get("01", "11") == frozenset({ZERO, E1, E2})
        assert table.get("11", "00") == frozenset()

    def test_origami_gap_two(self, origami):
        F, _ = origami
        table = exponent_table(F)
        assert len(table.get("00", "11")) == 9
        assert (2, 1, 0) in table.get("00", "11")
        assert set(table.gap_entries(2)) == {("00", "11")}

    def test_successors_follow_label_order(self, origami):
        F, _ = origami
        table = exponent_table(F)
        assert table.successors("11") == ["10", "01", "00"]
        assert table.successors("00") == []

    def test_degree_order_enforced(self):
        with pytest.raises(ValueError):
            ExponentTable(1, ["a", "b"], {"a": -1, "b": 0}, {("a", "b"): [(0,)]})

    def test_close_under_chains(self):
        table = close_under_chains(1, ["a", "b", "c"], {"a": -2, "b": -1, "c": 0},
                                   {("b", "a"): [(0,), (1,)], ("c", "b"): [(2,)]})
        assert table.get("c", "a") == frozenset({(2,), (3,)})

    @given(gap_one_data())
    @settings(max_examples=40, deadline=None)
    def test_property_closure_matches_path_sums(self, data):
        n, labels, degrees, gap_one = data
        table = close_under_chains(n, labels, degrees, gap_one)
        for i in labels:
            for j in labels:
                if degrees[i] > degrees[j]:
                    assert table.get(i, j) == frozenset(path_sums(degrees, gap_one, i, j))
                else:
                    assert table.get(i, j) == frozenset()


class TestChains:

    @given(gap_one_data())
    @settings(max_examples=30, deadline=None)
    def test_property_counts_are_product_sums(self, data):
        table = close_under_chains(*data)
        for k in range(min(max_chain_length(table) + 2, 4)):
            assert len(chains(table, k)) == counted_chains(table, k)

    def test_chain_shape(self):
        with pytest.raises(ValueError):
            Chain(("a",), ((0,),))

    def test_origami_counts(self, origami):
        F, _ = origami
        table = exponent_table(F)
        assert len(chains(table, 0)) == 4
        assert len(chains(table, 1)) == 21
        assert len(chains(table, 2)) == 18
        assert max_chain_length(table) == 2

    def test_line_counts(self, line):
        F, _ = line
        assert len(chains(exponent_table(F), 2)) == 32

    def test_threads_do_not_change_order(self, origami):
        F, _ = origami
        table = exponent_table(F)
        assert chains(table, 2, threads=3) == chains(table, 2, threads=1)

    def test_chains_are_valid(self, origami):
        F, _ = origami
        table = exponent_table(F)
        for chain in chains(table, 2):
            assert chain.is_valid(table)
            assert chain.offsets(3)[0] == ZERO


class TestEquivalence:

    def test_self(self, origami):
        F, _ = origami
        assert discrete_equivalent(info(F), info(F))

    def test_signatures_cached_per_matcher(self, origami):
        F, _ = origami
        first, second = _Matcher(info(F), info(F)), _Matcher(info(F), info(F))
        signature = first.signature("a", "11")
        assert first.signature("a", "11") is signature
        assert first._signatures == {("a", "11"): signature}
        assert second._signatures == {}
        assert signature == second.signature("b", "11")

    def test_different_complexes(self, origami, line):
        assert not discrete_equivalent(info(origami[0]), info(line[0]))

    def test_different_dimension(self, origami, point):
        assert not discrete_equivalent(info(origami[0]), info(point[0]))

    @given(label_offsets())
    @settings(max_examples=15, deadline=None)
    def test_property_rescaling_is_equivalent(self, offsets):
        xyz = ["x", "y", "z"]
        F = koszul([parse_laurent("1+x+y", xyz), parse_laurent("1+z+x*y", xyz)])
        G = F
        for label, m in offsets.items():
            G = rescale_summand(G, label, m)
        assert discrete_equivalent(info(F), info(G))
