from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from baire_lab.baire import ZERO, BaireParams, baire_norm
from baire_lab.hi import (
    DESK_PAIRS,
    dg_lower_bound,
    dg_upper_bound,
    even_op_functional,
    ground_functional,
    ground_norm,
    incomparable_nodes,
    schedule,
    strict_singularity_witness,
)
from baire_lab.trees import chain_tree, comb_tree, star_tree
from baire_lab.vectors import BaseNorm, TreeVector, unit_vector
from util import random_case


def test_ground_functional_validation():
    f = ground_functional([((), 1), ((0,), -1)])
    assert f.support() == {(), (0,)}
    with pytest.raises(ValueError):
        ground_functional([((0,), 1), ((1,), 1)])  # not a chain
    with pytest.raises(ValueError):
        ground_functional([((), Fraction(1, 2))])  # not a sign


def test_even_op_functional():
    f1 = ground_functional([((0,), 1)])
    f2 = ground_functional([((1,), -1)])
    g = even_op_functional(2, 4, [f1, f2])
    assert g.entries[(0,)] == Fraction(1, 2)
    assert g.entries[(1,)] == Fraction(-1, 2)
    with pytest.raises(ValueError):
        even_op_functional(2, 1, [f1, f2])  # more parts than n
    with pytest.raises(ValueError):
        even_op_functional(2, 4, [f2, f1])  # not successively supported


def test_ground_norm_examples():
    t = chain_tree(3)
    x = TreeVector(t, {(): 1, (0,): -2, (0, 0): 1})
    assert ground_norm(x) == 4  # signs flip along the chain
    s = star_tree(4)
    y = TreeVector(s, {(i,): 1 for i in range(4)})
    assert ground_norm(y) == 1  # every chain hits one leaf


def test_ground_norm_is_baire_zero_l1():
    # the ground norm is the 0-variant Baire norm with l_1 base
    params = BaireParams(ZERO, BaseNorm.ell(1))
    for seed in range(25):
        _, x = random_case(seed)
        assert ground_norm(x) == baire_norm(x, params).exact


def test_dg_bounds_bracket_and_witness_replays():
    for seed in range(20):
        _, x = random_case(seed)
        lower, witness = dg_lower_bound(x, 1, DESK_PAIRS)
        assert ground_norm(x) <= lower <= dg_upper_bound(x)
        assert witness(x) == lower


def test_dg_lower_monotone_in_depth():
    for seed in range(10):
        _, x = random_case(seed)
        v0, _ = dg_lower_bound(x, 0, [(2, 4)])
        v1, _ = dg_lower_bound(x, 1, [(2, 4)])
        v2, _ = dg_lower_bound(x, 2, [(2, 4)])
        assert v0 <= v1 <= v2


def test_dg_validation():
    _, x = random_case(0)
    with pytest.raises(ValueError):
        dg_lower_bound(x, -1, [(2, 4)])
    with pytest.raises(ValueError):
        dg_lower_bound(x, 1, [])
    with pytest.raises(ValueError):
        dg_lower_bound(x, 1, [(0, 4)])


def test_star_even_op_beats_ground():
    # n incomparable unit vectors: ground sees 1, one (m, n)-averaging
    # collects all n leaves at weight 1/m
    t = star_tree(8)
    x = TreeVector(t, {(i,): 1 for i in range(8)})
    lower, witness = dg_lower_bound(x, 1, [(2, 8)])
    assert lower == 4
    assert witness.provenance[0] == "even_op"


def test_incomparable_nodes():
    t = comb_tree(4)
    nodes = incomparable_nodes(t, 3)
    assert len(nodes) == 3
    with pytest.raises(ValueError):
        incomparable_nodes(chain_tree(3), 2)


def test_strict_singularity_witness_rows():
    rows = [strict_singularity_witness(star_tree(n), n, m) for m, n in DESK_PAIRS]
    ratios = [r["ratio"] for r in rows]
    assert ratios == [2, 4, 8, 16]
    for (m, n), r in zip(DESK_PAIRS, rows):
        assert r["ground"] == 1
        assert r["lower"] >= Fraction(n, m)
        assert r["lower"] <= r["upper"]
        assert r["witness"](TreeVector(star_tree(n), {t: 1 for t in r["nodes"]})) == r["lower"]


def test_strict_singularity_degenerate():
    r = strict_singularity_witness(star_tree(4), 4, 4)
    assert r["ratio"] == 1
    with pytest.raises(ValueError):
        strict_singularity_witness(star_tree(4), 4, 1)


def test_schedule_recurrences():
    s = schedule(3)
    assert s.m == [2, 32, 32**5]
    assert s.n[0] == 4
    assert s.n[1] == 20**15
    # n_{j+1} = (5 n_j)^(3 log2 m_{j+1})
    assert s.n[2] == (5 * s.n[1]) ** (3 * 25)
    with pytest.raises(ValueError):
        schedule(0)


@given(st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_ground_norm_unconditional(seed):
    tree, x = random_case(seed)
    flipped = TreeVector(tree, {t: -v for t, v in x.entries.items()})
    assert ground_norm(flipped) == ground_norm(x)
