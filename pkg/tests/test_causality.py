import random

import pytest

from credalarg import (ArgumentationFramework, CausalityGraph,
                       UnknownArgumentError, ValidationError,
                       causal_ancestors, check_attack_disjointness, partition)
from randgen import random_causality, random_framework

CORE = {"C", "D", "E", "F", "G", "H"}
PICKED = {"A", "F", "H", "D", "E", "G"}


class TestPartition:
    def test_diagnosis_partition(self, diagnosis):
        split = diagnosis.causality.partition()
        assert split.effects == {"A", "B", "G"}
        assert split.causes == {"C", "D", "F", "G", "H"}
        assert split.isolated == {"E"}

    def test_no_edges_means_all_isolated(self):
        graph = CausalityGraph(("x", "y"))
        split = partition(graph)
        assert split.isolated == {"x", "y"}
        assert not split.effects and not split.causes

    def test_single_edge(self):
        graph = CausalityGraph(("x", "y"), frozenset({("x", "y")}))
        split = graph.partition()
        assert split.causes == {"x"}
        assert split.effects == {"y"}
        assert split.isolated == set()

    def test_partition_invariants_on_random_graphs(self):
        rng = random.Random(7)
        for _ in range(40):
            af = random_framework(rng, max_args=9)
            graph = random_causality(rng, af)
            split = graph.partition()
            assert split.effects | split.causes | split.isolated == \
                set(graph.arguments)
            assert not (split.effects | split.causes) & split.isolated


class TestAncestors:
    def test_single_step(self, diagnosis):
        assert diagnosis.causality.ancestors_of("G") == {"H"}

    def test_transitive_closure(self, diagnosis):
        # H reaches A both directly and through G
        assert causal_ancestors("A", diagnosis.causality) == \
            {"D", "F", "G", "H"}

    def test_source_has_none(self, diagnosis):
        assert diagnosis.causality.ancestors_of("H") == frozenset()

    def test_never_contains_itself(self, diagnosis):
        for name in diagnosis.causality.arguments:
            assert name not in diagnosis.causality.ancestors_of(name)

    def test_unknown_argument(self, diagnosis):
        with pytest.raises(UnknownArgumentError):
            diagnosis.causality.ancestors_of("Z")

    def test_monotone_under_edge_addition(self):
        rng = random.Random(21)
        for _ in range(30):
            af = random_framework(rng, max_args=8, attack_p=0.0)
            graph = random_causality(rng, af, edge_p=0.2)
            order = list(af.arguments)
            rng.shuffle(order)
            extra = None
            for i, a in enumerate(order):
                for b in order[i + 1:]:
                    if (a, b) not in graph.edges and \
                            a not in graph.descendants_of(b):
                        extra = (a, b)
                        break
                if extra:
                    break
            if extra is None:
                continue
            bigger = CausalityGraph(graph.arguments,
                                    graph.edges | {extra})
            for name in graph.arguments:
                assert graph.ancestors_of(name) <= bigger.ancestors_of(name)


class TestGroupAnchors:
    def test_accepted_core(self, diagnosis):
        assert diagnosis.causality.group_anchors(CORE) == {"G"}

    def test_hand_picked_set(self, diagnosis):
        # G is an ancestor of A which is in the set, so only A anchors
        assert diagnosis.causality.group_anchors(PICKED) == {"A"}

    def test_no_effect_members_no_anchors(self, diagnosis):
        assert diagnosis.causality.group_anchors({"C", "D", "E"}) == set()


class TestFreeCauses:
    def test_accepted_core(self, diagnosis):
        assert diagnosis.causality.free_causes(CORE) == {"C", "D", "F"}

    def test_hand_picked_set_has_none(self, diagnosis):
        # every cause in the set reaches A or G inside the set
        assert diagnosis.causality.free_causes(PICKED) == set()

    def test_empty_set(self, diagnosis):
        assert diagnosis.causality.free_causes(set()) == set()


def test_anchor_and_free_containment_on_random_graphs():
    rng = random.Random(99)
    for _ in range(60):
        af = random_framework(rng, max_args=9)
        graph = random_causality(rng, af)
        split = graph.partition()
        pool = list(graph.arguments)
        subset = {a for a in pool if rng.random() < 0.5}
        anchors = graph.group_anchors(subset)
        free = graph.free_causes(subset)
        assert anchors <= split.effects & subset
        assert free <= split.causes & subset
        assert not anchors & free


class TestValidation:
    def test_cycle_rejected(self):
        with pytest.raises(ValidationError, match="cycle"):
            CausalityGraph(("x", "y"), frozenset({("x", "y"), ("y", "x")}))

    def test_self_edge_rejected(self):
        with pytest.raises(ValidationError):
            CausalityGraph(("x",), frozenset({("x", "x")}))

    def test_unknown_endpoint_rejected(self):
        with pytest.raises(UnknownArgumentError):
            CausalityGraph(("x",), frozenset({("x", "y")}))

    def test_attack_overlap_rejected_both_directions(self):
        af = ArgumentationFramework(("x", "y"), frozenset({("x", "y")}))
        aligned = CausalityGraph(af.arguments, frozenset({("x", "y")}))
        reversed_ = CausalityGraph(af.arguments, frozenset({("y", "x")}))
        for graph in (aligned, reversed_):
            with pytest.raises(ValidationError):
                check_attack_disjointness(graph, af.attacks)
