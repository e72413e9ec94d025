"""Walkthrough: l_p-Baire sum norms on small trees.

Shows how the norm rewards splitting mass across incomparable segments,
and how the 0-variant only ever sees one segment.
"""

from fractions import Fraction

from baire_lab import (
    BaireParams,
    BaseNorm,
    TreeVector,
    ZERO,
    baire_norm,
    chain_tree,
    comb_tree,
    star_tree,
)
from baire_lab.baire import baire_norm_report


def show(label, x, params):
    report = baire_norm_report(x, params)
    segs = [[list(n) for n in seg.chain] for seg in report.family]
    print("%-34s %-12s family=%s" % (label, report.value, segs))


def main():
    l1 = BaseNorm.ell(1)

    print("-- chains: one segment carries everything --")
    t = chain_tree(4)
    x = TreeVector(t, {(): 1, (0,): Fraction(1, 2), (0, 0, 0): 2})
    show("chain, p=1", x, BaireParams(1, l1))
    show("chain, p=0 (single segment)", x, BaireParams(ZERO, l1))

    print()
    print("-- stars: incomparable leaves add up --")
    s = star_tree(4)
    y = TreeVector(s, {(i,): 1 for i in range(4)})
    show("star of ones, p=1", y, BaireParams(1, l1))
    show("star of ones, p=2, base l2", y, BaireParams(2, BaseNorm.ell(2)))
    show("star of ones, p=0", y, BaireParams(ZERO, l1))

    print()
    print("-- a heavy root forces a choice --")
    z = TreeVector(s, {(): 5, (0,): 1, (1,): 1})
    show("root 5 + two leaves", z, BaireParams(1, l1))
    z2 = TreeVector(s, {(): Fraction(1, 2), (0,): 1, (1,): 1})
    show("root 1/2 + two leaves", z2, BaireParams(1, l1))

    print()
    print("-- comb: chain with teeth, sup base --")
    c = comb_tree(4)
    w = TreeVector(c, {(1,): 2, (0, 1): 3, (0, 0, 1): 1})
    show("comb teeth, p=1, sup base", w, BaireParams(1, BaseNorm.sup()))


if __name__ == "__main__":
    main()
