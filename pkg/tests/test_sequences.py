from fractions import Fraction

import pytest

from baire_lab.baire import BaireParams
from baire_lab.sequences import (
    FiniteBlockSequence,
    NormContext,
    equivalence_ratio_bounds,
    generate_incomparable_blocks,
    unconditionality_constant_lower,
)
from baire_lab.trees import chain_tree, random_tree, star_tree
from baire_lab.tsirelson import INCOMPARABLE, tsirelson_norm
from baire_lab.vectors import BaseNorm, TreeVector, unit_vector


def test_norm_context_dispatch():
    t = star_tree(3)
    x = TreeVector(t, {(0,): 1, (1,): 1})
    assert NormContext.ground(t).norm(x) == 1
    assert NormContext.tsirelson(t, INCOMPARABLE).norm(x).exact == tsirelson_norm(
        x, INCOMPARABLE
    )
    p1 = BaireParams(1, BaseNorm.ell(1))
    assert NormContext.baire(t, p1).norm(x) == 2
    assert NormContext.dg_lower(t, 1, [(2, 4)]).norm(x).exact >= 1


def test_block_sequence_window_validation():
    t = star_tree(3)
    b0, b1 = unit_vector(t, (0,)), unit_vector(t, (1,))
    FiniteBlockSequence([b0, b1], [(0, 1), (1, 2)], True)
    with pytest.raises(ValueError):
        FiniteBlockSequence([b0, b1], [(0, 2), (1, 2)], True)  # overlap
    with pytest.raises(ValueError):
        FiniteBlockSequence([b0], [(1, 2)], True)  # support escapes window


def test_combine():
    t = star_tree(3)
    seq = FiniteBlockSequence(
        [unit_vector(t, (0,)), unit_vector(t, (1,))], [(0, 1), (1, 2)], True
    )
    z = seq.combine([2, Fraction(-1, 2)])
    assert z[(0,)] == 2 and z[(1,)] == Fraction(-1, 2)


def test_generate_incomparable_blocks():
    t = star_tree(6)
    seq = generate_incomparable_blocks(t, 3, seed=11)
    assert len(seq) == 3
    ctx = NormContext.ground(t)
    for b in seq.blocks:
        v = ctx.norm(b)
        assert Fraction(1, 2) <= v.lower and v.upper <= 2
    # supports sit in increasing windows
    for (_, hi), (lo, _) in zip(seq.windows, seq.windows[1:]):
        assert hi <= lo


def test_generate_is_deterministic():
    t = random_tree(seed=3, max_nodes=12, max_branch=3)
    a = generate_incomparable_blocks(t, 2, seed=5)
    b = generate_incomparable_blocks(t, 2, seed=5)
    assert [x.entries for x in a.blocks] == [x.entries for x in b.blocks]


def test_generate_reports_max_count():
    t = chain_tree(4)  # one leaf only
    with pytest.raises(ValueError) as e:
        generate_incomparable_blocks(t, 2, seed=0)
    assert "at most 1" in str(e.value)


def test_equivalence_self_is_one():
    t = star_tree(5)
    seq = generate_incomparable_blocks(t, 3, seed=1)
    ctx = NormContext.ground(t)
    k, witness = equivalence_ratio_bounds(seq, ctx, seq, ctx, trials=4, seed=2)
    assert k == 1 and witness is not None


def test_equivalence_is_symmetric():
    t = star_tree(6)
    A = generate_incomparable_blocks(t, 3, seed=1)
    B = generate_incomparable_blocks(t, 3, seed=9)
    ga, gb = NormContext.ground(t), NormContext.tsirelson(t, INCOMPARABLE)
    k1, _ = equivalence_ratio_bounds(A, ga, B, gb, trials=5, seed=7)
    k2, _ = equivalence_ratio_bounds(B, gb, A, ga, trials=5, seed=7)
    assert k1 == k2
    assert k1 >= 1  # scaling mismatch always shows up in some direction


def test_equivalence_detects_scaling():
    t = star_tree(4)
    b = [unit_vector(t, (i,)) for i in range(2)]
    A = FiniteBlockSequence(b, [(0, 1), (1, 2)], True)
    B = FiniteBlockSequence([x.scale(3) for x in b], [(0, 1), (1, 2)], True)
    ctx = NormContext.ground(t)
    k, _ = equivalence_ratio_bounds(A, ctx, B, ctx, trials=0, seed=0)
    assert k >= 3


def test_equivalence_length_mismatch():
    t = star_tree(4)
    A = FiniteBlockSequence([unit_vector(t, (0,))], [(0, 1)], True)
    B = FiniteBlockSequence(
        [unit_vector(t, (0,)), unit_vector(t, (1,))], [(0, 1), (1, 2)], True
    )
    with pytest.raises(ValueError):
        equivalence_ratio_bounds(A, NormContext.ground(t), B, NormContext.ground(t), 1, 0)


def test_unconditionality_is_one_for_these_norms():
    # every norm in the package is 1-unconditional: sign flips and
    # coordinate deletions never increase the value
    t = star_tree(5)
    seq = generate_incomparable_blocks(t, 3, seed=2)
    for ctx in (NormContext.ground(t), NormContext.tsirelson(t, INCOMPARABLE)):
        assert unconditionality_constant_lower(seq, ctx, trials=2) == 1


def test_unconditionality_cap():
    t = star_tree(13, base_label=13)
    blocks = [unit_vector(t, (13 + i,)) for i in range(13)]
    windows = [(13 + i, 14 + i) for i in range(13)]
    seq = FiniteBlockSequence(blocks, windows, True)
    with pytest.raises(ValueError):
        unconditionality_constant_lower(seq, NormContext.ground(t))
