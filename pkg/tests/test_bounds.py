import math
from fractions import Fraction

import numpy as np
import pytest

from bounds import (
    StarPartition,
    as_exact,
    blowup_coefficient,
    blowup_density,
    complete_graph_criterion,
    dense1_criterion,
    dense2_criterion,
    disjoint_stars_target,
    elementary_symmetric,
    maclaurin_upper,
    monotonicity_check,
    random_baseline,
    recoloring_lower_bound,
    solve_blowup_recurrence,
    star_partitions,
    star_upper_bound,
    to_decimal,
    to_pq,
)
from errors import DomainError, IndeterminateError, ResourceError
from graphs import build_graph, copies_in_complete


@pytest.mark.parametrize(
    "e, r, expected",
    [(3, 3, Fraction(2, 9)), (1, 7, Fraction(1)), (5, 5, Fraction(24, 625)), (4, 3, Fraction(0)), (0, 2, Fraction(1))],
)
def test_random_baseline(e, r, expected):
    assert random_baseline(e, r) == expected


def test_random_baseline_domain():
    with pytest.raises(DomainError):
        random_baseline(3, 0)


def test_exact_text_forms():
    assert to_pq(Fraction(2, 9)) == "2/9"
    assert to_pq(Fraction(3)) == "3/1"
    assert to_decimal(Fraction(2, 9)) == "0.2222222222"
    assert to_decimal(Fraction(2, 9), 4) == "0.2222"
    assert to_decimal(Fraction(63000), 4) == "63000"
    assert to_decimal(Fraction(123457, 10), 4) == "12350"
    assert to_decimal(Fraction(1, 62), 4) == "0.01613"
    assert as_exact("3/6") == Fraction(1, 2)
    with pytest.raises(TypeError):
        as_exact(0.5)


def test_maclaurin_examples():
    assert elementary_symmetric([1, 2, 3], 2) == 11
    assert maclaurin_upper([1, 2, 3], 2) == 12
    c = Fraction(5, 7)
    assert maclaurin_upper([c, c, c], 2) == 3 * c**2 == elementary_symmetric([c, c, c], 2)
    xs = [Fraction(1), Fraction(2), Fraction(4)]
    assert maclaurin_upper(xs, 3) == Fraction(7, 3) ** 3 >= math.prod(xs)
    assert elementary_symmetric(xs, 0) == 1


def test_maclaurin_domain():
    with pytest.raises(DomainError):
        maclaurin_upper([1, 2], 3)
    with pytest.raises(DomainError):
        maclaurin_upper([1, 0], 1)


def test_maclaurin_property_on_random_instances():
    rng = np.random.Generator(np.random.PCG64(2024))
    for _ in range(1000):
        size = int(rng.integers(1, 9))
        constant = rng.random() < 0.2
        if constant:
            xs = [Fraction(int(rng.integers(1, 20)), int(rng.integers(1, 10)))] * size
        else:
            xs = [Fraction(int(rng.integers(1, 20)), int(rng.integers(1, 10))) for _ in range(size)]
        d = int(rng.integers(1, size + 1))
        total = elementary_symmetric(xs, d)
        upper = maclaurin_upper(xs, d)
        assert total <= upper
        if d == 1 or len(set(xs)) == 1:
            assert total == upper
        else:
            assert total < upper


@pytest.mark.parametrize(
    "n, m, r, expected",
    [(4, 3, 2, Fraction(9)), (5, 3, 2, Fraction(20)), (6, 2, 4, Fraction(30)), (6, 2, 1, Fraction(30))],
)
def test_star_upper_bound(n, m, r, expected):
    assert star_upper_bound(n, m, r) == expected


def test_star_partition_combinatorics():
    partition = StarPartition.of([2, 3, 3])
    assert partition.parts == (3, 3, 2)
    assert (partition.m, partition.k) == (8, 3)
    assert partition.gamma == 2
    assert partition.center_symmetry == 2
    assert partition.multinomial == 30
    assert partition.automorphisms == 16 == build_graph(partition.spec()).aut_count
    with pytest.raises(DomainError):
        StarPartition.of([3, 1])


def test_star_partitions_enumeration():
    assert [p.parts for p in star_partitions(6, 2)] == [(4, 2), (3, 3)]
    assert [p.parts for p in star_partitions(4, 2)] == [(2, 2)]
    assert [p.parts for p in star_partitions(7, 3)] == [(3, 2, 2)]
    assert list(star_partitions(5, 3)) == []


def test_disjoint_stars_two_matching_edges():
    partition = StarPartition.of([2, 2])
    n = 9
    normalized = disjoint_stars_target(partition, 2, n) / copies_in_complete(build_graph("stars:2,2"), n)
    assert normalized == Fraction(1, 2)


def test_single_star_target_is_the_star_expectation():
    partition = StarPartition.of([4])
    n, r = 7, 5
    expected = copies_in_complete(build_graph("S4"), n) * random_baseline(3, r)
    assert disjoint_stars_target(partition, r, n) == expected


def test_disjoint_stars_identity_for_all_partitions_up_to_eight():
    checked = 0
    for m in range(2, 9):
        for k in range(1, m // 2 + 1):
            for partition in star_partitions(m, k):
                n = m + 2
                target = disjoint_stars_target(partition, m, n)
                copies = copies_in_complete(build_graph(partition.spec()), n)
                assert target / copies == random_baseline(m - k, m)
                checked += 1
    assert checked > 10


@pytest.mark.parametrize("parts", [[2, 2], [3, 2], [3, 3, 2], [4, 2, 2]])
def test_disjoint_stars_identity_with_fewer_colors_than_vertices(parts):
    partition = StarPartition.of(parts)
    edges = partition.m - partition.k
    copies = copies_in_complete(build_graph(partition.spec()), 10)
    for r in range(edges, partition.m + 1):
        assert disjoint_stars_target(partition, r, 10) / copies == random_baseline(edges, r)


@pytest.mark.parametrize("parts, r, n", [([3, 3], 3, 10), ([2, 2], 1, 9), ([3, 3], 6, 5)])
def test_disjoint_stars_domain(parts, r, n):
    with pytest.raises(DomainError):
        disjoint_stars_target(StarPartition.of(parts), r, n)


@pytest.mark.parametrize(
    "a, t, m, expected",
    [(5, 10, 4, Fraction(1, 62)), (4, 1, 4, Fraction(1, 252)), (2, 1, 2, Fraction(1, 2))],
)
def test_blowup_coefficient(a, t, m, expected):
    assert blowup_coefficient(a, t, m).coefficient == expected


def test_blowup_coefficient_domain():
    with pytest.raises(DomainError):
        blowup_coefficient(1, 1, 2)


def test_recurrence_solution_matches_fig_k5_blow_up():
    rec = blowup_coefficient(5, 10, 4)
    assert solve_blowup_recurrence(rec, 1) == 10
    assert solve_blowup_recurrence(rec, 2) == 6300
    assert solve_blowup_recurrence(rec, 0) == 0
    density = blowup_density(rec, 4)
    assert density == Fraction(2, 31) > random_baseline(5, 5)


def test_complete_graph_criterion_examples():
    four = complete_graph_criterion(4)
    assert four.holds and four.lhs == Fraction(2, 21) and four.rhs == Fraction(5, 324)
    three = complete_graph_criterion(3)
    assert three.holds and three.lhs == Fraction(1, 4) and three.rhs == Fraction(2, 9)
    two = complete_graph_criterion(2)
    assert not two.holds and two.lhs == two.rhs == 1


@pytest.mark.parametrize("a", range(4, 11))
def test_complete_graph_criterion_holds_from_four(a):
    assert complete_graph_criterion(a).holds


def test_complete_graph_criterion_cap():
    with pytest.raises(ResourceError):
        complete_graph_criterion(13)
    assert complete_graph_criterion(13, cap=13).holds


def test_dense1_default_c_holds_for_six_vertices():
    result = dense1_criterion(6, 14)
    assert result.applicable and result.holds
    assert result.c.startswith("0.894427")


def test_dense1_small_c_fails_and_large_c_is_inapplicable():
    small = dense1_criterion(6, 14, "0.3")
    assert small.applicable and not small.holds
    large = dense1_criterion(6, 14, "0.99")
    assert not large.applicable and not large.holds


def test_dense1_guarded_comparison():
    with pytest.raises(IndeterminateError):
        dense1_criterion(6, 12, "0.8")


def test_dense1_domain():
    with pytest.raises(DomainError):
        dense1_criterion(6, 14, "1.5")


@pytest.mark.parametrize("m, e, expected", [(6, 14, True), (6, 13, False), (5, 10, False), (7, 17, False), (7, 18, True)])
def test_dense2(m, e, expected):
    assert dense2_criterion(m, e) is expected


@pytest.mark.parametrize("m", range(6, 31))
def test_dense2_implies_dense1_with_default_c(m):
    for e in range(math.comb(m, 2) + 1):
        if dense2_criterion(m, e):
            result = dense1_criterion(m, e)
            assert result.applicable and result.holds


@pytest.mark.parametrize(
    "rb, r, e, expected",
    [(4, 3, 3, Fraction(2)), (7, 3, 1, Fraction(7)), (9, 3, 5, Fraction(0)), (10, 4, 2, Fraction(9))],
)
def test_recoloring_lower_bound(rb, r, e, expected):
    assert recoloring_lower_bound(rb, r, e) == expected


def test_monotonicity_check():
    graph = build_graph("K3")
    assert monotonicity_check(graph, [(3, 1), (4, 4)])
    assert monotonicity_check(graph, [(3, 0), (4, 0), (5, 0)])
    assert not monotonicity_check(graph, [(3, 1), (4, 5)])
    with pytest.raises(DomainError):
        monotonicity_check(graph, [(3, 1), (5, 4)])
