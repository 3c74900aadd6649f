import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chevalley import (
    CartanBracketError,
    ConstantMatrix,
    InternalConsistencyError,
    SignedRoot,
    assign_extraspecial_constants,
    build_sum_dictionary,
    classify_quartet,
    compute_all_positive,
    enumerate_quartets,
    n_any,
    n_pos_neg,
    n_positive,
)

from conftest import DESK_SYSTEMS
from golden_tables import B2_ROOTS


def test_a1_matrix_is_a_single_zero(make_system):
    matrix = compute_all_positive(make_system("A", 1))
    assert matrix.size == 1
    assert matrix.get(0, 0) == 0
    assert matrix.is_complete()


def test_b2_nonzero_entries_match_brute_force(make_system, make_matrix):
    table = [coords for coords, _ in B2_ROOTS]
    expected = {
        (i, j)
        for i in range(4)
        for j in range(4)
        if i != j and tuple(x + y for x, y in zip(table[i], table[j])) in table
    }
    matrix = make_matrix("B", 2)
    actual = {(i, j) for i in range(4) for j in range(4) if matrix.get(i, j)}
    assert actual == expected == {(0, 1), (1, 0), (1, 2), (2, 1)}
    assert matrix.get(0, 1) == 1 and matrix.get(1, 2) == 2


def test_f4_magnitudes_are_one_or_two(make_matrix):
    assert {abs(n) for _, _, n in make_matrix("F", 4).nonzero_upper()} <= {1, 2}


def test_g2_reaches_magnitude_three(make_matrix):
    assert 3 in {abs(n) for _, _, n in make_matrix("G", 2).nonzero_upper()}


@pytest.mark.parametrize("kind,rank", DESK_SYSTEMS)
def test_matrix_invariants(make_system, make_matrix, kind, rank):
    system = make_system(kind, rank)
    matrix = make_matrix(kind, rank)
    assert matrix.is_complete()
    bound = 3 if kind == "G" else 2
    for i in range(matrix.size):
        for j in range(matrix.size):
            value = matrix.get(i, j)
            assert value == -matrix.get(j, i)
            assert (value != 0) == (i != j and system.index_of_sum(i, j) is not None)
            assert abs(value) <= bound


def test_determinism(make_system):
    system = make_system("C", 4)
    assert compute_all_positive(system) == compute_all_positive(system)


@pytest.mark.parametrize("kind,rank", [("B", 4), ("C", 4), ("F", 4), ("G", 2), ("D", 4)])
def test_seeds_are_respected(make_system, make_matrix, kind, rank):
    system = make_system(kind, rank)
    dictionary = build_sum_dictionary(system)
    assignment = assign_extraspecial_constants(system, dictionary)
    matrix = make_matrix(kind, rank)
    for _, (pair, value) in assignment.items():
        assert matrix.get(pair.i, pair.j) == value


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10**9))
def test_memoization_is_query_order_independent(seed):
    from chevalley import Diagram, build_root_system

    system = build_root_system(Diagram("B", 3))
    dictionary = build_sum_dictionary(system)
    assignment = assign_extraspecial_constants(system, dictionary)
    reference = compute_all_positive(system, dictionary, assignment)
    pairs = [(i, j) for i in range(len(system)) for j in range(len(system)) if i != j]
    random.Random(seed).shuffle(pairs)
    matrix = ConstantMatrix(len(system.positive_roots))
    for i, j in pairs:
        n_positive(system, matrix, dictionary, assignment, i, j)
    assert matrix == reference


def test_b6_recursion_has_exactly_one_live_term_per_quartet(make_system, make_matrix):
    system = make_system("B", 6)
    matrix = make_matrix("B", 6)
    for quartet in enumerate_quartets(system):
        roots = system.positive_roots
        base = roots[quartet.r1]
        diff_s = system.index_of_root(tuple(x - y for x, y in zip(roots[quartet.s], base)))
        diff_r = system.index_of_root(tuple(x - y for x, y in zip(roots[quartet.r], base)))
        term_one = (
            matrix.get(diff_s, quartet.r1) * matrix.get(diff_s, quartet.r)
            if diff_s is not None
            else 0
        )
        term_two = (
            matrix.get(quartet.r1, diff_r) * matrix.get(diff_r, quartet.s)
            if diff_r is not None
            else 0
        )
        assert matrix.get(quartet.r1, quartet.s1) != 0
        assert (term_one != 0) != (term_two != 0)


def test_c6_has_a_quartet_with_both_terms_live(make_system, make_matrix):
    system = make_system("C", 6)
    matrix = make_matrix("C", 6)
    both = 0
    for quartet in enumerate_quartets(system):
        cls = classify_quartet(system, quartet)
        if cls.mono:
            continue
        roots = system.positive_roots
        base = roots[quartet.r1]
        diff_s = system.index_of_root(tuple(x - y for x, y in zip(roots[quartet.s], base)))
        diff_r = system.index_of_root(tuple(x - y for x, y in zip(roots[quartet.r], base)))
        assert cls.phi == 2
        if (
            matrix.get(diff_s, quartet.r1) * matrix.get(diff_s, quartet.r) != 0
            and matrix.get(quartet.r1, diff_r) * matrix.get(diff_r, quartet.s) != 0
        ):
            both += 1
    assert both > 0


def test_n_positive_rejects_equal_indices(make_system, make_matrix):
    system = make_system("B", 2)
    dictionary = build_sum_dictionary(system)
    assignment = assign_extraspecial_constants(system, dictionary)
    with pytest.raises(ValueError):
        n_positive(system, make_matrix("B", 2), dictionary, assignment, 1, 1)


def test_corrupted_seed_is_caught_as_non_integral(make_system):
    # A3: the sum of all three simple roots has two decompositions; doubling
    # the seed makes the dependent constant a half-integer.
    system = make_system("A", 3)
    dictionary = build_sum_dictionary(system)
    assignment = assign_extraspecial_constants(system, dictionary)
    gamma = system.index_of_root((1, 1, 1))
    head = dictionary.extraspecial_pair(gamma)
    matrix = ConstantMatrix(len(system.positive_roots))
    matrix.set_antisymmetric(head.i, head.j, 2)  # true seed is 1
    other = [p for p in dictionary.pairs_for(gamma) if p != head][0]
    with pytest.raises(InternalConsistencyError):
        n_positive(system, matrix, dictionary, assignment, other.i, other.j)


def test_n_pos_neg_examples(make_system, make_matrix):
    system = make_system("B", 2)
    matrix = make_matrix("B", 2)
    # [1,1] + (-[0,1]) = [1,0]: constant 2, and the signed string has depth 1
    assert n_pos_neg(system, matrix, 2, 1) == 2
    # [1,0] + (-[1,2]) = -[0,2]: not a root
    assert n_pos_neg(system, matrix, 0, 3) == 0
    with pytest.raises(CartanBracketError):
        n_pos_neg(system, matrix, 1, 1)


def test_n_pos_neg_requires_a_complete_matrix(make_system):
    system = make_system("B", 2)
    with pytest.raises(ValueError):
        n_pos_neg(system, ConstantMatrix(len(system.positive_roots)), 2, 1)


@pytest.mark.parametrize("kind,rank", [("B", 2), ("C", 3), ("G", 2), ("A", 3)])
def test_n_any_sign_laws_exhaustively(make_system, make_matrix, kind, rank):
    system = make_system(kind, rank)
    matrix = make_matrix(kind, rank)
    count = len(system.positive_roots)
    signed = [SignedRoot(i, neg) for i in range(count) for neg in (False, True)]
    for a in signed:
        for b in signed:
            if a.index == b.index and a.negative != b.negative:
                with pytest.raises(CartanBracketError):
                    n_any(system, matrix, a, b)
                continue
            value = n_any(system, matrix, a, b)
            assert n_any(system, matrix, b, a) == -value
            assert n_any(system, matrix, a.opposite(), b.opposite()) == -value
            if a == b:
                assert value == 0


def test_n_any_b2_example(make_system, make_matrix):
    system = make_system("B", 2)
    matrix = make_matrix("B", 2)
    assert n_any(system, matrix, SignedRoot(0, True), SignedRoot(1, True)) == -1
    with pytest.raises(CartanBracketError):
        n_any(system, matrix, SignedRoot(0), SignedRoot(0, True))


def test_copy_is_independent(make_matrix):
    original = make_matrix("B", 2)
    duplicate = original.copy()
    duplicate.set_antisymmetric(0, 1, 7)
    assert original.get(0, 1) == 1 and duplicate.get(0, 1) == 7
    assert original != duplicate
