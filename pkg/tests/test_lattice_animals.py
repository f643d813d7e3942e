import pytest
from hypothesis import given
from hypothesis import strategies as st

from polymer_heaps.lattice_animals import (
    Animal,
    Segment,
    bottom_profile,
    count_animals,
    directed_lw_counts,
    enumerate_animals,
    is_directed,
    is_multi_directed,
    keystones,
    left_half_width_animal,
    reachable_from,
    segments,
    sources,
)

A = Animal.from_sites

V_SHAPE = A([(0, 0), (2, 0), (1, 1)])  # two sources flanking one keystone


class TestAnimal:
    def test_canonical_translation(self):
        assert A([(3, 2), (4, 3)]).sites == ((0, 0), (1, 1))

    def test_rejects_disconnected(self):
        with pytest.raises(ValueError):
            A([(0, 0), (3, 0)])

    def test_diagonal_is_connected(self):
        assert A([(0, 0), (1, 1)]).area == 2

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            A([])

    def test_serialization_sorted_by_xy(self):
        assert V_SHAPE.to_pairs() == [[0, 0], [1, 1], [2, 0]]


class TestSegments:
    def test_l_shape(self):
        a = A([(0, 0), (1, 0), (0, 1)])
        assert segments(a) == [Segment(0, 0, 1), Segment(1, 0, 0)]

    def test_single_site(self):
        assert segments(A([(0, 0)])) == [Segment(0, 0, 0)]

    def test_three_singletons(self):
        assert segments(V_SHAPE) == [Segment(0, 0, 0), Segment(0, 2, 2), Segment(1, 1, 1)]


class TestBottomProfile:
    def test_v_shape(self):
        assert bottom_profile(V_SHAPE) == [0, 1, 0]

    def test_horizontal_bar(self):
        assert bottom_profile(A([(0, 0), (1, 0)])) == [0, 0]

    def test_step(self):
        assert bottom_profile(A([(0, 0), (1, 1), (2, 1)])) == [0, 1, 1]


class TestSourcesKeystones:
    def test_v_shape(self):
        assert sources(V_SHAPE) == [(0, 0), (2, 0)]
        assert keystones(V_SHAPE) == [(1, 1)]

    def test_boundary_run_is_never_keystone(self):
        a = A([(0, 0), (1, 1), (2, 1)])
        assert sources(a) == [(0, 0)]
        assert keystones(a) == []

    def test_directed_animals_have_one_source_no_keystone(self):
        for n in range(1, 7):
            for a in enumerate_animals(n, "directed"):
                assert len(sources(a)) == 1
                assert keystones(a) == []

    def test_alternation(self, animals_small):
        # minima and maxima runs alternate, one more minimum than maximum
        for animals in animals_small.values():
            for a in animals:
                srcs, keys = sources(a), keystones(a)
                assert len(srcs) == len(keys) + 1
                merged = sorted([(x, "s") for x, _ in srcs] + [(x, "k") for x, _ in keys])
                assert all(a_[1] != b_[1] for a_, b_ in zip(merged, merged[1:]))


class TestReachability:
    def test_single_site(self):
        a = A([(0, 0)])
        assert reachable_from(a, (0, 0)) == {(0, 0)}

    def test_staircase_fully_reachable(self):
        a = A([(0, 0), (1, 1), (2, 1)])
        assert reachable_from(a, (0, 0)) == set(a.sites)

    def test_arcs_go_weakly_upward(self):
        assert reachable_from(V_SHAPE, (2, 0)) == {(2, 0), (1, 1)}

    def test_rejects_outside_site(self):
        with pytest.raises(ValueError):
            reachable_from(V_SHAPE, (5, 5))


class TestIsDirected:
    def test_bar(self):
        assert is_directed(A([(0, 0), (1, 0)]))

    def test_two_sources(self):
        assert not is_directed(V_SHAPE)

    def test_up_left_arc(self):
        assert is_directed(A([(0, 0), (-1, 1)]))


class TestLeftHalfWidth:
    def test_half_animal(self):
        assert left_half_width_animal(A([(0, 0), (0, 1)])) == 0
        assert left_half_width_animal(A([(0, 0), (1, 1)])) == 0

    def test_one(self):
        assert left_half_width_animal(A([(0, 0), (-1, 1)])) == 1

    def test_rejects_non_directed(self):
        with pytest.raises(ValueError):
            left_half_width_animal(V_SHAPE)


class TestIsMultiDirected:
    def test_directed_implies_multi(self):
        for n in range(1, 6):
            for a in enumerate_animals(n, "directed"):
                assert is_multi_directed(a)

    def test_v_shape(self):
        assert is_multi_directed(V_SHAPE)

    def test_exactly_two_area5_failures(self):
        animals = enumerate_animals(5, "all")
        failures = [a for a in animals if not is_multi_directed(a)]
        assert len(failures) == 2


class TestEnumeration:
    def test_single_cell(self):
        assert enumerate_animals(1, "all") == [A([(0, 0)])]

    def test_counts_prefix(self):
        assert count_animals(5, "all")[1:] == [1, 4, 20, 110, 638]
        assert count_animals(5, "directed")[1:] == [1, 4, 19, 96, 501]
        assert count_animals(5, "half")[1:] == [1, 3, 11, 45, 197]
        assert count_animals(5, "multi")[1:] == [1, 4, 20, 110, 636]

    def test_enumerate_matches_counts(self):
        for kind in ("all", "directed", "half", "multi"):
            counts = count_animals(5, kind)
            for n in range(1, 6):
                animals = enumerate_animals(n, kind)
                assert len(animals) == counts[n]
                assert len(set(animals)) == len(animals)
                assert animals == sorted(animals, key=lambda a: a.sites)

    def test_directed_four_of_area_two(self):
        assert len(enumerate_animals(2, "directed")) == 4

    def test_half_eleven_of_area_three(self):
        assert len(enumerate_animals(3, "half")) == 11

    def test_translation_canonical(self, animals_small):
        for animals in animals_small.values():
            for a in animals:
                shifted = [(x + 2, y + 3) for x, y in a.sites]
                assert A(shifted) == a

    def test_budget_guard(self):
        with pytest.raises(ValueError):
            count_animals(11, "all")
        with pytest.raises(ValueError):
            enumerate_animals(13, "directed")
        with pytest.raises(ValueError):
            count_animals(0, "all")

    def test_lw_histogram_sums_to_directed_counts(self):
        hist = directed_lw_counts(6)
        counts = count_animals(6, "directed")
        for n in range(1, 7):
            assert sum(hist[n]) == counts[n]

    @given(st.integers(1, 5))
    def test_multi_between_directed_and_all(self, n):
        d = count_animals(5, "directed")[n]
        m = count_animals(5, "multi")[n]
        al = count_animals(5, "all")[n]
        assert d <= m <= al
