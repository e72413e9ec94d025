"""Shared seeded generators for the test suite."""

import random
from fractions import Fraction

from baire_lab.trees import random_tree
from baire_lab.vectors import TreeVector


def random_case(seed, max_nodes=10, max_support=8, max_branch=3):
    """Deterministic (tree, vector) pair with |supp| <= max_support."""
    rng = random.Random(seed)
    tree = random_tree(seed=rng.randrange(2**32), max_nodes=max_nodes,
                       max_branch=max_branch)
    nodes = sorted(tree.nodes, key=tree.index)
    k = rng.randint(1, min(max_support, len(nodes)))
    supp = rng.sample(nodes, k)
    entries = {
        t: Fraction(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice([1, -1])
        for t in supp
    }
    return tree, TreeVector(tree, entries)


def random_nonroot_case(seed, max_nodes=16, max_support=12, max_branch=3):
    """Like random_case but keeps the root out of the support."""
    rng = random.Random(seed)
    while True:
        tree = random_tree(seed=rng.randrange(2**32), max_nodes=max_nodes,
                           max_branch=max_branch)
        nodes = sorted(tree.nodes, key=tree.index)[1:]
        if nodes:
            break
    k = rng.randint(1, min(max_support, len(nodes)))
    supp = rng.sample(nodes, k)
    entries = {
        t: Fraction(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice([1, -1])
        for t in supp
    }
    return tree, TreeVector(tree, entries)
