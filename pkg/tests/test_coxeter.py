"""Root tables, group enumeration, and the reflection dictionary."""

import math
from fractions import Fraction

import pytest

from weakorder.coxeter import (
    CoxeterGraph,
    FinitenessExceeded,
    NotAReflection,
    RootSubset,
    WrongType,
    build_system,
    generate_positive_roots,
    left_reflection_set,
)

# root counts and group orders from the classification of finite types
ROOT_COUNTS = {
    "A1": 1, "A2": 3, "A3": 6, "A4": 10,
    "B2": 4, "B3": 9, "B4": 16,
    "D4": 12,
    "F4": 24,
    "H3": 15,
    "I2(5)": 5, "I2(6)": 6, "I2(7)": 7, "I2(12)": 12,
}
GROUP_ORDERS = {
    "A1": 2, "A2": 6, "A3": 24, "A4": 120,
    "B2": 8, "B3": 48, "B4": 384,
    "D4": 192,
    "F4": 1152,
    "H3": 120,
    "I2(5)": 10, "I2(6)": 12, "I2(7)": 14, "I2(12)": 24,
}


def test_root_counts_match_classification():
    for name, count in ROOT_COUNTS.items():
        table = generate_positive_roots(CoxeterGraph.from_name(name))
        assert table.n_roots == count, name


def test_group_orders_match_classification():
    for name, order in GROUP_ORDERS.items():
        system = build_system(name)
        assert system.size == order, name
        assert system.longest_element.length == system.table.n_roots


def test_h4_root_count():
    table = generate_positive_roots(CoxeterGraph.from_name("H4"))
    assert table.n_roots == 60


def test_a3_root_list_and_order():
    system = build_system("A3")
    names = [system.table.roots[r].render() for r in range(6)]
    assert names == ["a1", "a2", "a3", "a2 + a3", "a1 + a2", "a1 + a2 + a3"]
    depths = [system.table.roots[r].depth for r in range(6)]
    assert depths == [0, 0, 0, 1, 1, 2]


def test_a3_coordinates_are_zero_one_integers():
    system = build_system("A3")
    for root in system.table.roots:
        for c in root.coords:
            assert c.coeffs in ((Fraction(0),), (Fraction(1),))


def test_i2_coordinates_are_sine_ratios():
    # the m dihedral positive roots are (sin((j+1)t), sin(jt))/sin(t) for
    # j = 0..m-1 with t = pi/m, checked numerically against the exact table
    for m in (4, 5, 7, 8):
        system = build_system(f"I2({m})")
        got = sorted(
            tuple(round(c.to_float(), 9) for c in root.coords)
            for root in system.table.roots
        )
        t = math.pi / m
        s = math.sin(t)
        expected = sorted(
            (round(math.sin((j + 1) * t) / s, 9), round(math.sin(j * t) / s, 9))
            for j in range(m)
        )
        assert got == expected


def test_simple_reflection_permutes_other_positive_roots():
    system = build_system("B3")
    act = system.table.act
    n = system.table.n_roots
    for i in range(system.graph.rank):
        assert act[i][i] == -(i + 1)
        others = {abs(act[i][v]) - 1 for v in range(n) if v != i}
        assert others == set(range(n)) - {i}


def test_act_table_is_an_involution():
    for name in ("A3", "B3", "H3", "I2(7)"):
        system = build_system(name)
        act = system.table.act
        n = system.table.n_roots
        for t in range(n):
            for v in range(n):
                image = act[t][v]
                back = act[t][image - 1] if image > 0 else -act[t][-image - 1]
                assert back == v + 1, (name, t, v)


def test_act_fixes_own_root():
    for name in ("A3", "H3"):
        system = build_system(name)
        for t in range(system.table.n_roots):
            assert system.table.act[t][t] == -(t + 1)


def test_reflection_words_match_phi_dictionary():
    system = build_system("A3")
    by_name = {
        system.table.roots[r].render(): system.reflection(r)
        for r in range(system.table.n_roots)
    }
    assert by_name["a1"].word == (1,)
    assert by_name["a1 + a2"].word in ((1, 2, 1), (2, 1, 2))
    assert by_name["a1 + a2 + a3"].word in (
        (3, 1, 2, 1, 3), (1, 3, 2, 3, 1), (3, 2, 1, 2, 3), (1, 2, 3, 2, 1),
    )
    for r in range(system.table.n_roots):
        refl = system.reflection(r)
        assert refl.length % 2 == 1
        assert system.reflection_root(refl) == r


def test_reflection_root_rejects_non_reflections():
    system = build_system("A3")
    with pytest.raises(NotAReflection):
        system.reflection_root(system.element_from_word((1, 2)))


def test_length_changes_by_one_per_generator():
    system = build_system("B3")
    for x in system.elements():
        for i in range(1, system.graph.rank + 1):
            y = system.element_from_word(x.word + (i,))
            assert abs(y.length - x.length) == 1


def test_inversion_set_of_word_prefix_grows():
    # a reduced word read left-to-right adds a new right inversion per letter
    system = build_system("A3")
    for x in system.elements():
        bits = 0
        for k in range(len(x.word)):
            y = system.element_from_word(x.word[: k + 1])
            assert y.length == k + 1
        assert system.element_from_word(x.word) == x


def test_inversion_sets_are_unique_and_sized_by_length():
    for name in ("A3", "B3", "I2(9)"):
        system = build_system(name)
        seen = set()
        for x in system.elements():
            bits = x.inversion_bits
            assert bits not in seen
            seen.add(bits)
            assert bin(bits).count("1") == x.length


def test_worked_inversion_set():
    system = build_system("A3")
    w = system.element_from_word((1, 2))
    got = {system.table.roots[r].render() for r in left_reflection_set(w).indices()}
    assert got == {"a1", "a1 + a2"}
    w = system.element_from_word((2, 1))
    got = {system.table.roots[r].render() for r in left_reflection_set(w).indices()}
    assert got == {"a2", "a1 + a2"}


def test_longest_element_has_all_inversions():
    for name in ("A3", "B2", "I2(6)", "H3"):
        system = build_system(name)
        w0 = system.longest_element
        assert w0.inversion_bits == (1 << system.table.n_roots) - 1


def test_left_and_right_reflection_products_are_involutions():
    system = build_system("B3")
    npt = system.numpy_tables()
    for r in range(system.table.n_roots):
        for x in range(system.size):
            assert npt.left[r, int(npt.left[r, x])] == x
            assert npt.right[r, int(npt.right[r, x])] == x


def test_left_product_by_reflection_agrees_with_word_composition():
    system = build_system("A3")
    for r in range(system.table.n_roots):
        t = system.reflection(r)
        for x in system.elements():
            product = system.element_from_word(t.word + x.word)
            assert system.left_mul_reflection(r, x.index) == product.index
            product = system.element_from_word(x.word + t.word)
            assert system.right_mul_reflection(x.index, r) == product.index


def test_permutation_dictionary_is_a_bijection_on_s4():
    import itertools

    system = build_system("A3")
    seen = set()
    for x in system.elements():
        line = system.permutation_of(x)
        assert system.element_of_permutation(line) == x
        seen.add(line)
    assert seen == set(itertools.permutations((1, 2, 3, 4)))


def test_permutation_dictionary_composes_like_words():
    system = build_system("A3")
    s1 = system.permutation_of(system.element_from_word((1,)))
    assert s1 == (2, 1, 3, 4)
    w = system.permutation_of(system.element_from_word((2, 1)))
    assert w == (3, 1, 2, 4)


def test_wrong_type_for_permutations():
    system = build_system("B3")
    with pytest.raises(WrongType):
        system.permutation_of(system.identity)


def test_graph_validation():
    with pytest.raises(ValueError):
        CoxeterGraph(rank=2, m=((1, 2), (3, 1)))  # asymmetric
    with pytest.raises(ValueError):
        CoxeterGraph(rank=2, m=((2, 3), (3, 1)))  # bad diagonal
    with pytest.raises(ValueError):
        CoxeterGraph(rank=2, m=((1, 1), (1, 1)))  # off-diagonal < 2
    with pytest.raises(ValueError):
        CoxeterGraph.from_name("Z9")
    with pytest.raises(ValueError):
        CoxeterGraph.from_name("I2(1)")


def test_graph_from_json_round_trip():
    graph = CoxeterGraph.from_json({"rank": 2, "m": [[1, 7], [7, 1]], "name": "seven"})
    assert graph.name == "seven"
    assert graph.ring_parameter == 7
    system = build_system(graph)
    assert system.size == 14


def test_ring_parameter_is_lcm_of_labels():
    assert CoxeterGraph.from_name("A3").ring_parameter == 3
    assert CoxeterGraph.from_name("B3").ring_parameter == 12
    assert CoxeterGraph.from_name("H3").ring_parameter == 15
    assert CoxeterGraph.from_name("F4").ring_parameter == 12
    assert CoxeterGraph.from_name("I2(7)").ring_parameter == 7


def test_infinite_group_hits_the_root_cap():
    affine = CoxeterGraph.from_matrix(
        [[1, 3, 3], [3, 1, 3], [3, 3, 1]], name="affine-triangle"
    )
    with pytest.raises(FinitenessExceeded):
        generate_positive_roots(affine, cap=200)


def test_element_cap():
    with pytest.raises(FinitenessExceeded):
        build_system("A4", element_cap=50)


def test_root_subset_operations():
    system = build_system("A2")
    table = system.table
    a = RootSubset(table, 0b011)
    b = RootSubset(table, 0b110)
    assert (a | b).bits == 0b111
    assert (a & b).bits == 0b010
    assert (a - b).bits == 0b001
    assert a.complement().bits == 0b100
    assert len(a) == 2 and a.indices() == (0, 1)


def test_backends_produce_identical_tables():
    for name in ("A3", "B3", "I2(5)"):
        exact = build_system(name, backend="exact")
        approx = build_system(name, backend="float")
        assert exact.table.n_roots == approx.table.n_roots
        assert exact.table.act == approx.table.act
        for r in range(exact.table.n_roots):
            for ce, cf in zip(exact.table.roots[r].coords, approx.table.roots[r].coords):
                assert abs(ce.to_float() - cf.to_float()) <= 1e-9
