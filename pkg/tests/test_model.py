from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rbac_sev import UnknownRole, depth, depths, dfs_order, height, leaves
from conftest import generated_policies, tree_from


def test_leaves_golden(golden_tree):
    assert leaves(golden_tree) == ["r2", "r5", "r6", "r7", "r10", "r11", "r9"]


def test_leaves_single_node():
    tree = tree_from("assign r1 p1\n")
    assert leaves(tree) == ["r1"]


def test_leaves_chain():
    tree = tree_from("edge r1 r2\nedge r2 r3\nassign r3 p1\n")
    assert leaves(tree) == ["r3"]


def test_depth_golden(golden_tree):
    assert depth(golden_tree, "r1") == 0
    assert depth(golden_tree, "r10") == 3
    assert depth(golden_tree, "r5") == 2


def test_depth_unknown_role(golden_tree):
    with pytest.raises(UnknownRole):
        depth(golden_tree, "r99")


def test_depths_matches_depth(golden_tree):
    all_depths = depths(golden_tree)
    assert all_depths == {r: depth(golden_tree, r) for r in golden_tree.roles}
    assert height(golden_tree) == 3


def test_dfs_order_starts_at_root(golden_tree):
    order = dfs_order(golden_tree)
    assert order[0] == "r1"
    assert sorted(order) == sorted(golden_tree.roles)


def test_edge_count_invariant():
    # |roles| = 1 + number of edges, for any valid tree
    for text in generated_policies(25):
        tree = tree_from(text)
        edge_count = sum(len(c) for c in tree.children_of.values())
        assert len(tree.roles) == 1 + edge_count
        assert leaves(tree)
        assert all(not tree.children_of[l] for l in leaves(tree))


@given(a=st.integers(-100, 100), b=st.integers(1, 100), c=st.integers(1, 100))
def test_rational_cancellation(a, b, c):
    assert Fraction(a, b) * Fraction(b, c) == Fraction(a, c)


@given(k=st.integers(1, 500))
def test_rational_unit_partition(k):
    assert sum([Fraction(1, k)] * k) == 1
