"""Root systems of the simple types in explicit ambient coordinates.

Realizations (Bourbaki numbering):

* ``A_n``  in R^(n+1): alpha_i = e_i - e_(i+1)
* ``B_n``  in R^n:     alpha_i = e_i - e_(i+1), alpha_n = e_n
* ``C_n``  in R^n:     alpha_i = e_i - e_(i+1), alpha_n = 2 e_n
* ``D_n``  in R^n:     alpha_i = e_i - e_(i+1), alpha_n = e_(n-1) + e_n
* ``E_6, E_7, E_8`` in R^8 (the first 6/7 simple roots of E_8)
* ``F_4``  in R^4:     e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2
* ``G_2``  in R^3:     e1-e2 (short), -2e1+e2+e3 (long)

Weights are integer vectors in the fundamental-weight basis: coordinate ``i``
is ``<lambda, alpha_i> = 2(lambda, alpha_i)/(alpha_i, alpha_i)``. The Cartan
matrix uses ``C[i][j] = <alpha_j, alpha_i>``, so column ``j`` holds the
fundamental coordinates of ``alpha_j``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm

from .errors import IndexOutOfRange, NonIntegral, UnsupportedType, ZeroVector
from .exactnum import RationalMatrix, dot, format_rational, inverse

AmbientVector = tuple[Fraction, ...]
Weight = tuple[int, ...]

RANK_LIMITS = {"A": (1, 8), "B": (2, 8), "C": (2, 8), "D": (4, 8)}
EXCEPTIONAL = {("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)}

POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def supported_types() -> list[tuple[str, int]]:
    out = []
    for fam, (lo, hi) in RANK_LIMITS.items():
        out.extend((fam, n) for n in range(lo, hi + 1))
    out.extend(sorted(EXCEPTIONAL))
    return out


def is_supported(family: str, rank: int) -> bool:
    if (family, rank) in EXCEPTIONAL:
        return True
    lo_hi = RANK_LIMITS.get(family)
    return lo_hi is not None and lo_hi[0] <= rank <= lo_hi[1]


def _vec(*xs) -> AmbientVector:
    return tuple(Fraction(x) for x in xs)


def _unit(dim: int, i: int, c=1) -> list[Fraction]:
    v = [Fraction(0)] * dim
    v[i] = Fraction(c)
    return v


def _classical_simple_roots(family: str, n: int) -> list[AmbientVector]:
    dim = n + 1 if family == "A" else n
    roots = []
    for i in range(n - 1):
        v = [Fraction(0)] * dim
        v[i], v[i + 1] = Fraction(1), Fraction(-1)
        roots.append(tuple(v))
    if family == "A":
        v = [Fraction(0)] * dim
        v[n - 1], v[n] = Fraction(1), Fraction(-1)
        roots.append(tuple(v))
    elif family == "B":
        roots.append(tuple(_unit(dim, n - 1)))
    elif family == "C":
        roots.append(tuple(_unit(dim, n - 1, 2)))
    elif family == "D":
        v = [Fraction(0)] * dim
        v[n - 2], v[n - 1] = Fraction(1), Fraction(1)
        roots.append(tuple(v))
    return roots


def _e8_simple_roots() -> list[AmbientVector]:
    h = Fraction(1, 2)
    roots = [
        (h, -h, -h, -h, -h, -h, -h, h),
        _vec(1, 1, 0, 0, 0, 0, 0, 0),
    ]
    for i in range(6):
        v = [Fraction(0)] * 8
        v[i], v[i + 1] = Fraction(-1), Fraction(1)
        roots.append(tuple(v))
    return roots


def _simple_roots(family: str, n: int) -> list[AmbientVector]:
    if family in "ABCD":
        return _classical_simple_roots(family, n)
    if family == "E":
        return _e8_simple_roots()[:n]
    if family == "F":
        h = Fraction(1, 2)
        return [_vec(0, 1, -1, 0), _vec(0, 0, 1, -1), _vec(0, 0, 0, 1), (h, -h, -h, -h)]
    if family == "G":
        return [_vec(1, -1, 0), _vec(-2, 1, 1)]
    raise UnsupportedType(f"unknown family {family!r}")


def _cartan(simple: list[AmbientVector]) -> tuple[tuple[int, ...], ...]:
    n = len(simple)
    rows = []
    for i in range(n):
        ai = simple[i]
        nai = dot(ai, ai)
        rows.append(tuple(int(2 * dot(simple[j], ai) / nai) for j in range(n)))
    return tuple(rows)


def _positive_roots_from_cartan(cartan) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates, ordered by height.

    Root strings: for a positive root beta and simple alpha_i != beta, the
    alpha_i-string through beta runs beta - p alpha_i, ..., beta + q alpha_i with
    p - q = <beta, alpha_i>. Building upward by height, p is known when beta is
    reached, so q follows.
    """
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = list(simple)
    known = set(roots)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            # <beta, alpha_i> = sum_j beta_j C[i][j]
            for i in range(n):
                if beta == simple[i]:
                    continue
                pairing = sum(beta[j] * cartan[i][j] for j in range(n))
                p = 0
                cur = list(beta)
                while True:
                    cur[i] -= 1
                    if tuple(cur) in known:
                        p += 1
                    else:
                        break
                q = p - pairing
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
        nxt.sort(key=lambda r: tuple(-x for x in r))
        roots.extend(nxt)
        layer = nxt
    return roots


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    ambient_dim: int
    simple_roots: tuple[AmbientVector, ...]
    cartan_matrix: tuple[tuple[int, ...], ...]
    # simple-root coordinates of each positive root, ordered by height
    positive_root_coeffs: tuple[tuple[int, ...], ...]
    positive_roots: tuple[AmbientVector, ...] = field(repr=False)

    @property
    def tag(self) -> tuple[str, int]:
        return (self.family, self.rank)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @cached_property
    def roots(self) -> tuple[AmbientVector, ...]:
        """All roots: positive ones followed by their negatives."""
        return self.positive_roots + tuple(tuple(-x for x in r) for r in self.positive_roots)

    @cached_property
    def cartan_inverse(self) -> RationalMatrix:
        return inverse(RationalMatrix.from_rows(self.cartan_matrix))

    @cached_property
    def fundamental_weights(self) -> tuple[AmbientVector, ...]:
        # omega_i = sum_j (C^-1)[j][i] alpha_j
        cinv = self.cartan_inverse
        out = []
        for i in range(self.rank):
            v = [Fraction(0)] * self.ambient_dim
            for j in range(self.rank):
                c = cinv[j, i]
                if c:
                    for k, a in enumerate(self.simple_roots[j]):
                        v[k] += c * a
            out.append(tuple(v))
        return tuple(out)

    @cached_property
    def weyl_vector_rho(self) -> AmbientVector:
        return tuple(sum(col, Fraction(0)) for col in zip(*self.fundamental_weights))

    @cached_property
    def fundamental_gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """Gram matrix of the fundamental weights under the ambient dot product."""
        w = self.fundamental_weights
        return tuple(tuple(dot(a, b) for b in w) for a in w)

    @cached_property
    def positive_roots_fundamental(self) -> tuple[Weight, ...]:
        return tuple(self.simple_coeffs_to_weight(c) for c in self.positive_root_coeffs)

    @cached_property
    def simple_roots_fundamental(self) -> tuple[Weight, ...]:
        return tuple(tuple(self.cartan_matrix[i][j] for i in range(self.rank))
                     for j in range(self.rank))

    @cached_property
    def half_norms(self) -> tuple[int, ...]:
        """Integers proportional to (alpha_j, alpha_j)/2, one per simple root."""
        q = [dot(a, a) / 2 for a in self.simple_roots]
        den = lcm(*(x.denominator for x in q))
        return tuple(int(x * den) for x in q)

    def form_root(self, x: Weight, coeffs) -> int:
        """Scaled form (x, beta) for beta = sum_j coeffs[j] alpha_j, as an integer.

        Uses (omega_i, alpha_j) = delta_ij (alpha_j, alpha_j)/2; the common
        scale factor cancels in every ratio this is used for.
        """
        s = self.half_norms
        return sum(c * x[j] * s[j] for j, c in enumerate(coeffs) if c)

    def simple_coeffs_to_weight(self, coeffs) -> Weight:
        n = self.rank
        return tuple(sum(coeffs[j] * self.cartan_matrix[i][j] for j in range(n))
                     for i in range(n))

    def form(self, x: Weight, y: Weight) -> Fraction:
        """Invariant form of two weights given in fundamental coordinates."""
        g = self.fundamental_gram
        return sum((x[i] * g[i][j] * y[j] for i in range(self.rank) for j in range(self.rank)
                    if x[i] and y[j]), Fraction(0))

    def simple_coordinates(self, w: Weight) -> tuple[Fraction, ...]:
        """Coefficients of a weight in the simple-root basis (rational in general)."""
        cinv = self.cartan_inverse
        return tuple(sum((cinv[i, j] * w[j] for j in range(self.rank)), Fraction(0))
                     for i in range(self.rank))

    def height(self, w: Weight) -> Fraction:
        return sum(self.simple_coordinates(w), Fraction(0))

    def root_length_classes(self) -> dict[str, tuple[AmbientVector, ...]]:
        norms = sorted({dot(r, r) for r in self.positive_roots})
        long_norm = norms[-1]
        out = {"long": tuple(r for r in self.positive_roots if dot(r, r) == long_norm)}
        if len(norms) > 1:
            out["short"] = tuple(r for r in self.positive_roots if dot(r, r) == norms[0])
        return out

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "ambient_dim": self.ambient_dim,
            "simple_roots": [[format_rational(x) for x in r] for r in self.simple_roots],
            "positive_roots": [[format_rational(x) for x in r] for r in self.positive_roots],
            "positive_roots_simple_coords": [list(c) for c in self.positive_root_coeffs],
            "cartan_matrix": [list(r) for r in self.cartan_matrix],
            "fundamental_weights": [[format_rational(x) for x in r]
                                    for r in self.fundamental_weights],
        }


@lru_cache(maxsize=None)
def build(family: str, rank: int) -> RootSystem:
    family = family.upper()
    if not is_supported(family, rank):
        raise UnsupportedType(f"unsupported simple type ({family}, {rank})")
    simple = _simple_roots(family, rank)
    cartan = _cartan(simple)
    coeffs = _positive_roots_from_cartan(cartan)
    dim = len(simple[0])
    pos = []
    for c in coeffs:
        v = [Fraction(0)] * dim
        for j, cj in enumerate(c):
            if cj:
                for k, a in enumerate(simple[j]):
                    v[k] += cj * a
        pos.append(tuple(v))
    return RootSystem(
        family=family,
        rank=rank,
        ambient_dim=dim,
        simple_roots=tuple(simple),
        cartan_matrix=cartan,
        positive_root_coeffs=tuple(coeffs),
        positive_roots=tuple(pos),
    )


def pairing(rs: RootSystem | None, beta, lam) -> Fraction:
    """``<beta, lam> = 2 (beta, lam) / (lam, lam)`` under the ambient dot product."""
    nl = dot(lam, lam)
    if nl == 0:
        raise ZeroVector("pairing against the zero vector")
    return 2 * dot(beta, lam) / nl


def to_fundamental(rs: RootSystem, v) -> Weight:
    out = []
    for a in rs.simple_roots:
        p = pairing(rs, v, a)
        if p.denominator != 1:
            raise NonIntegral(f"<v, alpha> = {format_rational(p)} is not an integer")
        out.append(int(p))
    return tuple(out)


def to_ambient(rs: RootSystem, w: Weight) -> AmbientVector:
    v = [Fraction(0)] * rs.ambient_dim
    for c, om in zip(w, rs.fundamental_weights):
        if c:
            for k, a in enumerate(om):
                v[k] += c * a
    return tuple(v)


def reflect(rs: RootSystem, w: Weight, i: int) -> Weight:
    """Simple reflection ``s_i`` (1-based index) acting on a weight."""
    if not 1 <= i <= rs.rank:
        raise IndexOutOfRange(f"simple root index {i} outside 1..{rs.rank}")
    c = w[i - 1]
    if c == 0:
        return tuple(w)
    col = [rs.cartan_matrix[k][i - 1] for k in range(rs.rank)]
    return tuple(x - c * a for x, a in zip(w, col))


def dominant_conjugate(rs: RootSystem, w: Weight) -> Weight:
    w = list(w)
    cm = rs.cartan_matrix
    n = rs.rank
    while True:
        i = next((k for k in range(n) if w[k] < 0), None)
        if i is None:
            return tuple(w)
        c = w[i]
        for k in range(n):
            w[k] -= c * cm[k][i]


def weyl_orbit(rs: RootSystem, w: Weight) -> set[Weight]:
    seen = {tuple(w)}
    stack = [tuple(w)]
    while stack:
        x = stack.pop()
        for i in range(1, rs.rank + 1):
            if x[i - 1] != 0:
                y = reflect(rs, x, i)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return seen
