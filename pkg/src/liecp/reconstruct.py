"""Recover the irreducible decomposition from a weight multiset.

Repeatedly take a weight of maximal height among those still present; it must
be dominant and heads an irreducible constituent, whose whole weight system is
then removed. Inputs that are not characters are rejected with
:class:`~liecp.errors.NotACharacter` rather than silently mis-decomposed.
"""
from __future__ import annotations

import random
from collections import Counter

from .errors import NotACharacter, TagMismatch
from .rootsys import RootSystem
from .weights import Decomposition, WeightMultiset, irrep_weights


def decompose(rs: RootSystem, gamma: WeightMultiset,
              tie_break: random.Random | None = None) -> Decomposition:
    """Decomposition ``D`` with ``rep_weights(rs, D) == gamma``.

    Among maximal-height weights the lexicographically largest is taken,
    unless ``tie_break`` is given, in which case one is drawn at random (the
    result must not depend on it).
    """
    if gamma.rs_tag != rs.tag:
        raise TagMismatch(f"{gamma.rs_tag} vs {rs.tag}")
    if not gamma.entries:
        raise ValueError("empty weight multiset")
    for w in gamma.entries:
        if len(w) != rs.rank:
            raise NotACharacter(f"weight {list(w)} has the wrong length for {rs.name}")

    remaining = Counter(gamma.entries)
    heights = {w: rs.height(w) for w in remaining}
    found: dict[tuple[int, ...], int] = {}
    while remaining:
        top = max(heights[w] for w in remaining)
        candidates = sorted(w for w in remaining if heights[w] == top)
        lam = tie_break.choice(candidates) if tie_break else candidates[-1]
        if any(x < 0 for x in lam):
            raise NotACharacter(
                f"maximal weight {list(lam)} is not dominant; not the weights of a representation"
            )
        c = remaining[lam]
        for w, m in irrep_weights(rs, lam).entries.items():
            left = remaining.get(w, 0) - c * m
            if left < 0:
                raise NotACharacter(
                    f"removing {c} x V({list(lam)}) needs weight {list(w)} with multiplicity "
                    f"{c * m}, only {remaining.get(w, 0)} present"
                )
            if left:
                remaining[w] = left
            else:
                del remaining[w]
        found[lam] = c
    return Decomposition(found, rs.tag)
