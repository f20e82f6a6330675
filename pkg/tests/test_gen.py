import pytest
from hypothesis import given
from hypothesis import strategies as st

from cbmg.errors import CapacityError, InputError
from cbmg.gen import (
    GenConfig,
    SplitMix64,
    bipartite_count,
    bitournament_count,
    enumerate_bipartite,
    enumerate_bitournaments,
    random_bipartite_digraph,
    random_bitournament,
    random_tree,
)
from cbmg.io import graph_to_dict
from cbmg.phylo import to_newick
from cbmg.props import is_bitournament


def test_splitmix_reference_values():
    # published reference outputs for seed 1234567
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(3)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
    ]


def test_below_stays_in_range():
    rng = SplitMix64(5)
    draws = [rng.below(7) for _ in range(2000)]
    assert set(draws) == set(range(7))
    with pytest.raises(ValueError):
        rng.below(0)


def test_tree_examples():
    t, c = random_tree(GenConfig(kind="tree", leaves=2, colors=2, seed=1))
    assert len(t.leaves) == 2 and set(c.assignment.values()) == {"A", "B"}
    cfg = GenConfig(kind="tree", leaves=5, colors=2, seed=42)
    assert to_newick(*random_tree(cfg)) == to_newick(*random_tree(cfg))
    with pytest.raises(InputError):
        GenConfig(kind="tree", leaves=3, colors=4)


def test_config_validation():
    with pytest.raises(InputError):
        GenConfig(kind="nope")
    with pytest.raises(InputError):
        GenConfig(kind="bipartite", p=1.5)
    with pytest.raises(InputError):
        GenConfig(kind="bipartite", n_u=0)


def test_bipartite_examples():
    g = random_bipartite_digraph(GenConfig(kind="bipartite", n_u=3, n_v=2, p=0.0))
    assert g.n_edges == 0
    g = random_bipartite_digraph(GenConfig(kind="bipartite", n_u=3, n_v=2, p=1.0))
    assert g.n_edges == 12
    cfg = GenConfig(kind="bipartite", n_u=2, n_v=2, p=0.5, seed=7)
    assert graph_to_dict(random_bipartite_digraph(cfg)) == graph_to_dict(random_bipartite_digraph(cfg))


def test_sink_free_patching():
    cfg = GenConfig(kind="bipartite", n_u=3, n_v=3, p=0.0, ensure_sink_free=True, seed=3)
    g = random_bipartite_digraph(cfg)
    assert all(g.out(v) for v in g)
    assert g.is_bipartite_proper()


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_bipartite(1, 1)) == 4
    assert sum(1 for _ in enumerate_bipartite(2, 2)) == 256
    assert bipartite_count(2, 3) == 4096
    assert sum(1 for _ in enumerate_bitournaments(2, 2)) == 16
    assert sum(1 for _ in enumerate_bitournaments(2, 3)) == 64
    assert sum(1 for _ in enumerate_bitournaments(1, 1)) == 2
    with pytest.raises(CapacityError):
        next(enumerate_bipartite(2, 5))
    with pytest.raises(CapacityError):
        next(enumerate_bitournaments(4, 4))


def test_enumerators_emit_each_graph_once():
    edge_sets = {tuple(g.edges()) for g in enumerate_bipartite(2, 3)}
    assert len(edge_sets) == bipartite_count(2, 3)
    edge_sets = {tuple(g.edges()) for g in enumerate_bitournaments(2, 3)}
    assert len(edge_sets) == bitournament_count(2, 3)


def test_random_bitournaments_are_bitournaments():
    cfg = GenConfig(kind="bitournament", n_u=3, n_v=4, seed=11)
    for trial in range(20):
        assert is_bitournament(random_bitournament(cfg, trial)).ok


@given(st.integers(0, 2**40), st.integers(2, 14), st.integers(2, 4))
def test_random_trees_are_valid(seed, leaves, colors):
    leaves = max(leaves, colors)
    cfg = GenConfig(kind="tree", leaves=leaves, colors=colors, seed=seed)
    t, c = random_tree(cfg)
    assert len(t.leaves) == leaves
    assert set(c.assignment.values()) == set(c.color_set)
    assert all(len(t.children[v]) != 1 for v in range(len(t.parent)))
    assert to_newick(t, c) == to_newick(*random_tree(cfg))
