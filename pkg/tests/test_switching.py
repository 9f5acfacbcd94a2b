import random

import pytest

from sgw.constructions import make
from sgw.core import build, walk_sign
from sgw.errors import DifferentUnderlyingGraphError, NotACycleError
from sgw.switching import (
    CycleClass,
    canonical_form,
    classify_cycle,
    equivalent,
    is_balanced,
    switch,
)

from oracles import random_connected_signed_graph, random_signature


class TestSwitch:
    def test_flips_cut_edges_only(self):
        g = build(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
        s = switch(g, {0})
        assert s.sign(0, 1) == -1 and s.sign(0, 2) == -1
        assert s.sign(1, 2) == 1

    def test_switching_everything_is_identity(self):
        g = make("UC", 5)
        assert switch(g, range(5)) == g

    def test_involution_random(self):
        rng = random.Random(11)
        for _ in range(50):
            g = random_connected_signed_graph(rng, 2, 7)
            x = frozenset(v for v in range(g.n) if rng.random() < 0.5)
            assert switch(switch(g, x), x) == g


class TestBalance:
    def test_balanced_cycle_gives_switch_set(self):
        g = build(4, [(0, 1, -1), (1, 2, -1), (2, 3, 1), (0, 3, 1)])
        ok, x = is_balanced(g)
        assert ok
        assert switch(g, x).negative_edges() == ()

    def test_unbalanced_cycle_gives_negative_walk(self):
        g = make("UC", 5)
        ok, witness = is_balanced(g)
        assert not ok
        assert witness[0] == witness[-1]
        assert walk_sign(g, witness) == -1

    def test_bc_balanced_uc_not(self):
        for n in (3, 4, 5, 6):
            assert is_balanced(make("BC", n))[0]
            assert not is_balanced(make("UC", n))[0]

    def test_per_component(self):
        g = build(6, [(0, 1, -1), (1, 2, -1), (0, 2, 1), (3, 4, -1), (4, 5, 1)])
        ok, x = is_balanced(g)
        assert ok and switch(g, x).negative_edges() == ()

    def test_random_witnesses_are_valid(self):
        rng = random.Random(23)
        for _ in range(100):
            g = random_connected_signed_graph(rng, 2, 8)
            ok, witness = is_balanced(g)
            if ok:
                assert switch(g, witness).negative_edges() == ()
            else:
                assert witness[0] == witness[-1]
                assert walk_sign(g, witness) == -1


class TestEquivalent:
    def test_switched_copy_is_equivalent(self):
        rng = random.Random(37)
        for _ in range(100):
            g = random_connected_signed_graph(rng, 2, 8)
            x = frozenset(v for v in range(g.n) if rng.random() < 0.5)
            found = equivalent(g, switch(g, x))
            assert found is not None
            assert switch(g, found) == switch(g, x)

    def test_not_equivalent(self):
        assert equivalent(make("BC", 4), make("UC", 4)) is None

    def test_different_underlying_rejected(self):
        with pytest.raises(DifferentUnderlyingGraphError):
            equivalent(build(3, [(0, 1, 1)]), build(3, [(1, 2, 1)]))
        with pytest.raises(DifferentUnderlyingGraphError):
            equivalent(build(2, [(0, 1, 1)]), build(3, [(0, 1, 1)]))


class TestCanonicalForm:
    def test_depends_only_on_class(self):
        rng = random.Random(41)
        for _ in range(100):
            g = random_connected_signed_graph(rng, 2, 8)
            x = frozenset(v for v in range(g.n) if rng.random() < 0.5)
            c1, x1 = canonical_form(g)
            c2, _ = canonical_form(switch(g, x))
            assert c1 == c2
            assert switch(g, x1) == c1

    def test_separates_classes(self):
        c1, _ = canonical_form(make("BC", 5))
        c2, _ = canonical_form(make("UC", 5))
        assert c1 != c2

    def test_balanced_graph_canonicalizes_all_positive(self):
        rng = random.Random(43)
        g = random_connected_signed_graph(rng, 3, 8)
        balanced = switch(g.with_signs({(u, v): 1 for u, v, _ in g.edges}),
                          {0, 2})
        assert canonical_form(balanced)[0].negative_edges() == ()


class TestClassifyCycle:
    @pytest.mark.parametrize(
        "name,length,expected",
        [
            ("BC", 4, CycleClass.BC_EVEN),
            ("BC", 5, CycleClass.BC_ODD),
            ("UC", 4, CycleClass.UC_EVEN),
            ("UC", 5, CycleClass.UC_ODD),
        ],
    )
    def test_classes(self, name, length, expected):
        assert classify_cycle(make(name, length)) == expected

    def test_class_is_switching_invariant(self):
        rng = random.Random(47)
        for length in (3, 4, 5, 6):
            base = make("BC", length)
            for _ in range(20):
                edges = random_signature(rng, base.underlying_edges())
                g = build(length, edges)
                x = frozenset(v for v in range(length) if rng.random() < 0.5)
                assert classify_cycle(g) == classify_cycle(switch(g, x))

    def test_rejects_non_cycles(self):
        with pytest.raises(NotACycleError):
            classify_cycle(build(3, [(0, 1, 1), (1, 2, 1)]))
        with pytest.raises(NotACycleError):
            classify_cycle(make("K_plus", 4))
        with pytest.raises(NotACycleError):
            # two disjoint triangles: right degrees, not one cycle
            classify_cycle(
                build(6, [(0, 1, 1), (1, 2, 1), (0, 2, 1),
                          (3, 4, 1), (4, 5, 1), (3, 5, 1)])
            )
