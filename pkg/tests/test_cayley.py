import itertools
import random

import pytest

from cayleykit.cayley import (
    build_cayley,
    commutator_cycle,
    commuting_4cycle,
    count_4cycles_through,
    cyc_graph,
    element_degrees,
    is_normal,
    same_element_criterion,
    walk_in_graph,
)
from cayleykit.errors import CapExceeded
from cayleykit.gensets import GeneratorSet, construct_cycle_pair
from cayleykit.groups import enumerate_elements
from cayleykit.perms import CycleType, Permutation


def P(text, n):
    return Permutation.from_text(text, n)


def make_set(texts, n, parts):
    return GeneratorSet(n, [P(t, n) for t in texts], CycleType(parts))


PATH5 = make_set(["(1 2)", "(2 3)", "(3 4)", "(4 5)"], 5, [2])


class TestBuildCayley:
    def test_s3_pair_is_a_six_cycle(self):
        g = build_cayley(make_set(["(1 2)", "(2 3)"], 3, [2]))
        assert g.vertex_count == 6
        assert len(g.edges) == 6
        assert all(len(g.neighbors[v]) == 2 for v in range(6))
        # isomorphic to the 6-cycle: connected 2-regular on six vertices

    def test_single_edge(self):
        g = build_cayley(make_set(["(1 2)"], 2, [2]))
        assert g.vertex_count == 2 and len(g.edges) == 1
        assert g.label_multiplicity(0) == 1

    def test_cycle_pair_graph_shape(self):
        g = build_cayley(construct_cycle_pair(4), cap=6000)
        assert g.vertex_count == 5040
        degrees = {len(g.neighbors[v]) for v in range(g.vertex_count)}
        assert degrees == {4}
        assert len(g.edges) == 5040 * 4 // 2

    def test_edge_rule_is_left_multiplication(self):
        g = build_cayley(PATH5)
        for u, x in enumerate(g.vertex_perm[:30]):
            for i, t in enumerate(PATH5.elements):
                v = g.vertex_of(t * x)
                assert v in g.neighbors[u]

    def test_right_multiplication_preserves_edges(self):
        g = build_cayley(make_set(["(1 2)", "(2 3)"], 3, [2]))
        rng = random.Random(8)
        elements = g.vertex_perm
        edge_set = {frozenset(e) for e in g.edges}
        for _ in range(50):
            h = rng.choice(elements)
            mapped = {
                frozenset((g.vertex_of(elements[u] * h), g.vertex_of(elements[v] * h)))
                for u, v in g.edges
            }
            assert mapped == edge_set

    def test_cap(self):
        with pytest.raises(CapExceeded):
            build_cayley(PATH5, cap=10)

    def test_vertex_order_matches_enumeration(self):
        g = build_cayley(PATH5)
        assert g.vertex_perm == enumerate_elements(PATH5.elements, 5, 1000)


class TestCycleGraphAndNormality:
    def test_path_is_normal(self):
        ok, reasons = is_normal(PATH5)
        assert ok and not reasons

    def test_four_point_path_is_not(self):
        ok, reasons = is_normal(make_set(["(1 2)", "(2 3)", "(3 4)"], 4, [2]))
        assert not ok
        assert any("leaves" in r for r in reasons)

    def test_two_elements_are_never_normal(self):
        ok, reasons = is_normal(make_set(["(1 2)", "(2 3)"], 3, [2]))
        assert not ok
        assert any("|T| = 2" in r for r in reasons)

    def test_degrees_and_leaves(self):
        assert element_degrees(PATH5) == [1, 2, 2, 1]

    def test_cycle_graph_edges(self):
        cg = cyc_graph(make_set(["(1 2 3 4)", "(4 5 6 7)"], 7, [4]))
        assert cg.graph.edges == (
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6),
        )
        assert cg.is_tree()

    def test_start_choice_does_not_affect_normality(self):
        T = make_set(["(1 2 3 4)", "(4 5 6 7)", "(7 8 9 10)"], 10, [4])
        default = is_normal(T)[0]
        for starts in itertools.product((1, 2, 3, 4), (4, 5, 6, 7), (7, 8, 9, 10)):
            chosen = {i: s for i, s in enumerate(starts)}
            assert is_normal(T, starts=chosen)[0] == default

    def test_multi_cycle_elements_rejected(self):
        with pytest.raises(ValueError):
            cyc_graph(make_set(["(1 2)(3 4)"], 4, [2, 2]))

    def test_cycle_graph_with_a_cycle_is_not_normal(self):
        T = make_set(["(1 2)", "(2 3)", "(1 3)"], 3, [2])
        ok, reasons = is_normal(T)
        assert not ok
        assert any("tree" in r for r in reasons)


class TestFourCycleProbes:
    def test_girth_six_graph_has_none(self):
        g = build_cayley(make_set(["(1 2)", "(2 3)"], 3, [2]))
        for edge in g.edges:
            assert count_4cycles_through(g, edge) == 0

    def test_commuting_labels_share_a_4cycle(self):
        g = build_cayley(PATH5)
        t1, t2 = PATH5.elements[0], PATH5.elements[2]
        e_t1 = (0, g.vertex_of(t1))
        assert count_4cycles_through(g, e_t1) >= 1

    def test_exhaustive_commutation_iff(self):
        g = build_cayley(PATH5)
        for t1, t2 in itertools.permutations(PATH5.elements, 2):
            cycle = commuting_4cycle(g, t1, t2)
            commutes = t1 * t2 == t2 * t1
            assert (cycle is not None) == commutes
            if cycle is not None:
                e, v1, w, v2 = cycle
                assert e == 0
                assert v1 == g.vertex_of(t1)
                assert w == g.vertex_of(t1 * t2)
                assert v2 == g.vertex_of(t2)

    def test_equal_generators_have_no_path(self):
        g = build_cayley(PATH5)
        assert commuting_4cycle(g, PATH5.elements[0], PATH5.elements[0]) is None

    def test_same_label_forces_equal_counts(self):
        # same labels always give equal counts; the converse direction is
        # checked separately because it genuinely fails on symmetric trees
        g = build_cayley(PATH5)
        rng = random.Random(9)
        for _ in range(50):
            y = rng.randrange(g.vertex_count)
            x, z = rng.sample(g.neighbors[y], 2)
            lx = dict(g.adjacency[y])[x]
            lz = dict(g.adjacency[y])[z]
            if {i for i, _ in lx} == {i for i, _ in lz}:
                assert same_element_criterion(g, x, y, z)

    def test_equal_counts_do_not_pin_the_label_on_symmetric_trees(self):
        # the two leaf transpositions of the 5-point path each commute with
        # exactly two others, so their edges carry equal 4-cycle counts
        # while representing different elements: the count criterion is
        # necessary, not sufficient, on label-symmetric sets
        g = build_cayley(PATH5)
        t1, t4 = PATH5.elements[0], PATH5.elements[3]
        x = g.vertex_of(t1)
        z = g.vertex_of(t4)
        assert same_element_criterion(g, x, 0, z)
        assert count_4cycles_through(g, (0, x)) == count_4cycles_through(g, (0, z)) == 2


class TestCommutatorCycles:
    def test_split_four_cycles_close_in_twelve_steps(self):
        a = P("(1 2 3 4)", 7)
        b = P("(4 5 6 7)", 7)
        word = commutator_cycle(a, b)
        assert len(word) == 13
        assert word[-1].is_identity()
        assert len(set(word[:-1])) == 12
        g = build_cayley(construct_cycle_pair(4), cap=6000)
        walk = walk_in_graph(g, word)
        assert walk[0] == walk[-1] == 0

    def test_transpositions_close_in_six(self):
        word = commutator_cycle(P("(1 2)", 3), P("(2 3)", 3))
        assert len(word) == 7
        assert word[-1].is_identity()
        assert len(set(word[:-1])) == 6

    def test_commuting_input_rejected(self):
        with pytest.raises(ValueError):
            commutator_cycle(P("(1 2)", 4), P("(3 4)", 4))

    def test_star_word_counterexample_closes(self):
        # four 4-cycles through a common point: the long mixed word
        # a b c d c b~ a~ b c~ d~ c~ b~ also evaluates to the identity
        n = 13
        a, b, c, d = (
            P("(1 2 3 4)", n),
            P("(1 5 6 7)", n),
            P("(1 8 9 10)", n),
            P("(1 11 12 13)", n),
        )
        letters = [a, b, c, d, c, b.inverse(), a.inverse(),
                   b, c.inverse(), d.inverse(), c.inverse(), b.inverse()]
        product = Permutation.identity(n)
        for letter in letters:
            product = product * letter
        assert product.is_identity()

    def test_commutator_of_adjacent_split_cycles_is_a_3cycle(self):
        rng = random.Random(10)
        for _ in range(30):
            k = rng.choice((3, 4, 5))
            n = 2 * k - 1
            points = list(range(1, n + 1))
            rng.shuffle(points)
            shared = points[0]
            a = Permutation.from_cycles([[shared] + points[1:k]], n)
            b = Permutation.from_cycles([[shared] + points[k:]], n)
            word = commutator_cycle(a, b)
            assert len(word) == 13 and word[-1].is_identity()
