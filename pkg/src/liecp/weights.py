"""Weight multisets of finite-dimensional representations.

Multiplicities come from Freudenthal's recursion evaluated on dominant weights
only; every other weight inherits the multiplicity of its dominant Weyl
conjugate. The form is the ambient dot product of the realization (any
positive multiple gives the same multiplicities).
"""
from __future__ import annotations

import os
from collections import Counter
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import DimensionCapExceeded, NotDominant, TagMismatch
from .rootsys import RootSystem, build, dominant_conjugate, weyl_orbit

DEFAULT_DIM_CAP = 10**6


def dim_cap() -> int:
    env = os.environ.get("LIECP_DIM_CAP")
    return int(env) if env else DEFAULT_DIM_CAP


class WeightMultiset:
    """Map weight -> positive multiplicity, tagged with its root system.

    Instances are treated as immutable; arithmetic returns new objects.
    """

    __slots__ = ("entries", "rs_tag")

    def __init__(self, entries: Mapping[tuple, int] | Iterable[tuple[tuple, int]], rs_tag):
        items = entries.items() if isinstance(entries, Mapping) else entries
        clean: dict[tuple[int, ...], int] = {}
        for w, m in items:
            if m < 0:
                raise ValueError(f"negative multiplicity {m} for {w}")
            if m:
                w = tuple(int(x) for x in w)
                clean[w] = clean.get(w, 0) + int(m)
        self.entries = clean
        self.rs_tag = tuple(rs_tag)

    @classmethod
    def from_counter(cls, c: Counter, rs_tag) -> "WeightMultiset":
        return cls({w: m for w, m in c.items() if m}, rs_tag)

    def total(self) -> int:
        return sum(self.entries.values())

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.sorted_items())

    def __getitem__(self, w) -> int:
        return self.entries.get(tuple(w), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightMultiset):
            return NotImplemented
        return self.rs_tag == other.rs_tag and self.entries == other.entries

    def __hash__(self):
        return hash((self.rs_tag, frozenset(self.entries.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{list(w)}: {m}" for w, m in self.sorted_items())
        return f"{type(self).__name__}({self.rs_tag[0]}{self.rs_tag[1]}, {{{body}}})"

    def sorted_items(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.entries.items())

    def counter(self) -> Counter:
        return Counter(self.entries)

    def scaled(self, k: int) -> "WeightMultiset":
        return type(self)({w: m * k for w, m in self.entries.items()}, self.rs_tag)

    def union(self, other: "WeightMultiset") -> "WeightMultiset":
        if self.rs_tag != other.rs_tag:
            raise TagMismatch(f"{self.rs_tag} vs {other.rs_tag}")
        c = self.counter()
        c.update(other.entries)
        return type(self).from_counter(c, self.rs_tag)

    def to_json(self) -> list[dict]:
        return [{"coords": list(w), "mult": m} for w, m in self.sorted_items()]

    @classmethod
    def from_json(cls, data: list[dict], rs_tag) -> "WeightMultiset":
        return cls([(tuple(e["coords"]), int(e["mult"])) for e in data], rs_tag)


class Decomposition(WeightMultiset):
    """Map dominant highest weight -> number of copies of that irreducible."""

    __slots__ = ()

    def __init__(self, entries, rs_tag):
        super().__init__(entries, rs_tag)
        for w in self.entries:
            if any(x < 0 for x in w):
                raise NotDominant(f"{list(w)} is not dominant")

    def to_json(self) -> list[dict]:
        return [{"highest": list(w), "mult": m} for w, m in self.sorted_items()]

    @classmethod
    def from_json(cls, data: list[dict], rs_tag) -> "Decomposition":
        return cls([(tuple(e["highest"]), int(e["mult"])) for e in data], rs_tag)


def _check_dominant(rs: RootSystem, highest) -> tuple[int, ...]:
    highest = tuple(int(x) for x in highest)
    if len(highest) != rs.rank:
        raise ValueError(f"weight {list(highest)} has length {len(highest)}, expected {rs.rank}")
    if any(x < 0 for x in highest):
        raise NotDominant(f"{list(highest)} is not dominant")
    return highest


def weyl_dim(rs: RootSystem, highest) -> int:
    """Weyl dimension formula, prod over positive roots of (lam+rho, b)/(rho, b)."""
    lam = _check_dominant(rs, highest)
    rho = (1,) * rs.rank
    lr = tuple(x + 1 for x in lam)
    num = den = 1
    for coeffs in rs.positive_root_coeffs:
        num *= rs.form_root(lr, coeffs)
        den *= rs.form_root(rho, coeffs)
    q, r = divmod(num, den)
    assert r == 0
    return q


def _dominant_multiplicities(rs: RootSystem, lam: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    n = rs.rank
    pos = list(zip(rs.positive_roots_fundamental, rs.positive_root_coeffs))

    # dominant weights below lam, reachable from lam by subtracting positive
    # roots while staying dominant; store the simple-root coordinates of lam - mu
    depth = {lam: (0,) * n}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            d = depth[mu]
            for beta, coeffs in pos:
                nu = tuple(a - b for a, b in zip(mu, beta))
                if min(nu) >= 0 and nu not in depth:
                    depth[nu] = tuple(a + b for a, b in zip(d, coeffs))
                    nxt.append(nu)
        frontier = nxt
    order = sorted(depth, key=lambda mu: sum(depth[mu]))

    mult: dict[tuple[int, ...], int] = {lam: 1}
    for mu in order[1:]:
        # (lam+rho)^2 - (mu+rho)^2 = (lam - mu, lam + mu + 2 rho)
        denom = rs.form_root(tuple(a + b + 2 for a, b in zip(lam, mu)), depth[mu])
        total = 0
        for beta, coeffs in pos:
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, beta))
                m = mult.get(dominant_conjugate(rs, nu), 0)
                if m == 0:
                    # weights of V(lam) along a root string form an unbroken string
                    break
                total += m * rs.form_root(nu, coeffs)
                k += 1
        value, rem = divmod(2 * total, denom)
        assert rem == 0, (lam, mu, total, denom)
        if value:
            mult[mu] = value
    return mult


@lru_cache(maxsize=4096)
def _irrep_weights_cached(family: str, rank: int, lam: tuple[int, ...]) -> WeightMultiset:
    rs = build(family, rank)
    entries: dict[tuple[int, ...], int] = {}
    for mu, m in _dominant_multiplicities(rs, lam).items():
        for w in weyl_orbit(rs, mu):
            entries[w] = m
    return WeightMultiset(entries, rs.tag)


def irrep_weights(rs: RootSystem, highest, cap: int | None = None) -> WeightMultiset:
    """All weights of the irreducible module with the given highest weight."""
    lam = _check_dominant(rs, highest)
    cap = dim_cap() if cap is None else cap
    d = weyl_dim(rs, lam)
    if d > cap:
        raise DimensionCapExceeded(
            f"dim V({list(lam)}) = {d} exceeds the cap {cap} (set LIECP_DIM_CAP to raise it)"
        )
    return _irrep_weights_cached(rs.family, rs.rank, lam)


def rep_weights(rs: RootSystem, d: Decomposition, cap: int | None = None) -> WeightMultiset:
    if not d.entries:
        raise ValueError("empty decomposition")
    if d.rs_tag != rs.tag:
        raise TagMismatch(f"{d.rs_tag} vs {rs.tag}")
    c: Counter = Counter()
    for lam, k in d.entries.items():
        for w, m in irrep_weights(rs, lam, cap).entries.items():
            c[w] += k * m
    return WeightMultiset.from_counter(c, rs.tag)


def decomposition_dim(rs: RootSystem, d: Decomposition) -> int:
    return sum(k * weyl_dim(rs, lam) for lam, k in d.entries.items())
