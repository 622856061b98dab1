"""Characteristic polynomials in canonical form.

A full characteristic polynomial is stored as the decomposition it determines
(:class:`CharPoly`); its restriction to the Cartan variables is stored as the
multiset of its linear factors ``z0 + c_1 z1 + ... + c_n zn``
(:class:`LinearFactors`, keyed by the coefficient vector, which is a weight in
fundamental coordinates). Expanded polynomials are produced only on request and
only at small degree.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import CapExceeded, TagMismatch
from .poly import SparsePoly
from .reconstruct import decompose
from .rootsys import RootSystem
from .weights import Decomposition, WeightMultiset, decomposition_dim, rep_weights

LinearFactors = WeightMultiset


@dataclass(frozen=True)
class CharPoly:
    decomposition: Decomposition

    @property
    def rs_tag(self):
        return self.decomposition.rs_tag

    @classmethod
    def of(cls, rs: RootSystem, highest_weights) -> "CharPoly":
        """Characteristic polynomial of a direct sum of irreducibles.

        ``highest_weights`` is an iterable of highest weights (repeats allowed)
        or a mapping highest weight -> multiplicity.
        """
        if hasattr(highest_weights, "items"):
            return cls(Decomposition(highest_weights, rs.tag))
        c = Counter(tuple(w) for w in highest_weights)
        return cls(Decomposition(c, rs.tag))

    def dim(self, rs: RootSystem) -> int:
        return decomposition_dim(rs, self.decomposition)

    def to_json(self) -> list[dict]:
        return self.decomposition.to_json()


def trivial(rs: RootSystem) -> CharPoly:
    return CharPoly(Decomposition({(0,) * rs.rank: 1}, rs.tag))


def linearize(rs: RootSystem, f: CharPoly) -> LinearFactors:
    return rep_weights(rs, f.decomposition)


def resolution_product(a: LinearFactors, b: LinearFactors) -> LinearFactors:
    """Pairwise sums of factor vectors, multiplicities multiplied and merged."""
    if a.rs_tag != b.rs_tag:
        raise TagMismatch(f"{a.rs_tag} vs {b.rs_tag}")
    out: Counter = Counter()
    b_items = list(b.entries.items())
    for wa, ma in a.entries.items():
        for wb, mb in b_items:
            out[tuple(x + y for x, y in zip(wa, wb))] += ma * mb
    return LinearFactors.from_counter(out, a.rs_tag)


def product_on_charpoly(rs: RootSystem, f: CharPoly, g: CharPoly) -> CharPoly:
    """Resolution product of full polynomials: the tensor product decomposition."""
    if f.rs_tag != rs.tag or g.rs_tag != rs.tag:
        raise TagMismatch(f"{f.rs_tag} / {g.rs_tag} vs {rs.tag}")
    return CharPoly(decompose(rs, resolution_product(linearize(rs, f), linearize(rs, g))))


def expand_small(a: LinearFactors, degree_cap: int = 64) -> SparsePoly:
    """Expanded ``prod (z0 + c . z)^mult`` in variables z0..zn."""
    deg = a.total()
    if deg > degree_cap:
        raise CapExceeded(f"degree {deg} exceeds cap {degree_cap}")
    n = a.rs_tag[1]
    out = SparsePoly.constant(n + 1, 1)
    for w, m in a.sorted_items():
        out = out * SparsePoly.linear((1,) + tuple(w)) ** m
    return out


def factored_text(a: LinearFactors) -> str:
    """Human-readable factored form, e.g. ``z0 * (z0 + 2*z1) * (z0 - 2*z1)``."""
    parts = []
    for w, m in sorted(a.entries.items(), reverse=True):
        lin = "z0"
        for i, c in enumerate(w, start=1):
            if c:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                lin += f" {'+' if c > 0 else '-'} {mag}z{i}"
        s = lin if lin == "z0" else f"({lin})"
        parts.append(s if m == 1 else f"{s}^{m}")
    return " * ".join(parts)
