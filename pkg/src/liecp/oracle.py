"""Symbolic determinants of matrix pencils for explicit sl(2) representations.

This is the brute-force side of the library: it expands
``det(z0*I + z1*X1 + ... + zm*Xm)`` as an honest polynomial, independently of
the weight machinery, so the factored forms elsewhere can be checked against
it at small sizes.

The sl(2) module V(m) uses the basis v_0..v_m with::

    h v_k = (m - 2k) v_k,   e v_k = (m - k + 1) v_(k-1),   f v_k = (k + 1) v_(k+1)
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ShapeError, SingularB, SizeCapExceeded
from .exactnum import RationalMatrix, rank_over_rationals
from .poly import SparsePoly

PENCIL_SIZE_CAP = 12
VARIABLE_CAP = 8


@dataclass(frozen=True)
class MatrixPencil:
    size: int
    generators: tuple[RationalMatrix, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.rows != self.size or g.cols != self.size:
                raise ShapeError(f"generator of shape {g.rows}x{g.cols}, expected {self.size}")

    @property
    def nvars(self) -> int:
        return len(self.generators) + 1

    def transformed(self, b: RationalMatrix) -> "MatrixPencil":
        """Generators ``w_i = sum_j b[i][j] v_j``."""
        m = len(self.generators)
        if b.rows != m or b.cols != m:
            raise ShapeError(f"base change must be {m}x{m}")
        gens = []
        for i in range(m):
            acc = RationalMatrix.zeros(self.size, self.size)
            for j in range(m):
                if b[i, j]:
                    acc = acc + self.generators[j].scale(b[i, j])
            gens.append(acc)
        return MatrixPencil(self.size, tuple(gens))


def _commutator(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    return (a @ b) + (b @ a).scale(-1)


def sl2_matrices(m: int) -> MatrixPencil:
    """(h, e, f) acting on the irreducible module of dimension m + 1."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    d = m + 1
    h = [[0] * d for _ in range(d)]
    e = [[0] * d for _ in range(d)]
    f = [[0] * d for _ in range(d)]
    for k in range(d):
        h[k][k] = m - 2 * k
        if k >= 1:
            e[k - 1][k] = m - k + 1
        if k + 1 < d:
            f[k + 1][k] = k + 1
    return MatrixPencil(d, tuple(RationalMatrix.from_rows(x, cols=d) for x in (h, e, f)))


def adjoint_sl2_pencil() -> MatrixPencil:
    """ad h, ad e, ad f in the ordered basis (h, e, f), from the brackets alone."""
    # [h,e]=2e, [h,f]=-2f, [e,f]=h; column j = coordinates of [x, basis_j]
    ad_h = [[0, 0, 0], [0, 2, 0], [0, 0, -2]]
    ad_e = [[0, 0, 1], [-2, 0, 0], [0, 0, 0]]
    ad_f = [[0, -1, 0], [0, 0, 0], [2, 0, 0]]
    return MatrixPencil(3, tuple(RationalMatrix.from_rows(x) for x in (ad_h, ad_e, ad_f)))


def tau(p: MatrixPencil) -> MatrixPencil:
    """The automorphism (h, e, f) -> (-h, f, e) applied to an sl(2) pencil."""
    h, e, f = p.generators
    return MatrixPencil(p.size, (h.scale(-1), f, e))


def brackets_hold(p: MatrixPencil) -> bool:
    h, e, f = p.generators
    return (_commutator(h, e) == e.scale(2)
            and _commutator(h, f) == f.scale(-2)
            and _commutator(e, f) == h)


def _pencil_matrix(p: MatrixPencil) -> list[list[SparsePoly]]:
    nv = p.nvars
    out = []
    for i in range(p.size):
        row = []
        for j in range(p.size):
            coeffs = [Fraction(int(i == j))] + [g[i, j] for g in p.generators]
            row.append(SparsePoly.linear(coeffs) if any(coeffs) else SparsePoly.zero(nv))
        out.append(row)
    return out


def _cofactor_det(a: list[list[SparsePoly]], nv: int) -> SparsePoly:
    n = len(a)
    if n == 0:
        return SparsePoly.constant(nv, 1)
    if n == 1:
        return a[0][0]
    total = SparsePoly.zero(nv)
    for j in range(n):
        if a[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * _cofactor_det(minor, nv)
        total = total + term if j % 2 == 0 else total - term
    return total


def _bareiss_det(a: list[list[SparsePoly]], nv: int) -> SparsePoly:
    n = len(a)
    a = [row[:] for row in a]
    sign = 1
    prev = SparsePoly.constant(nv, 1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if swap is None:
                return SparsePoly.zero(nv)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        p = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = p * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev) if not num.is_zero() else num
            a[i][k] = SparsePoly.zero(nv)
        prev = p
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def det_pencil(p: MatrixPencil, cap: int = PENCIL_SIZE_CAP) -> SparsePoly:
    """Expanded ``det(z0 I + sum_i z_i X_i)`` as a polynomial in z0..zm."""
    if p.size > cap:
        raise SizeCapExceeded(f"pencil size {p.size} exceeds cap {cap}")
    if p.nvars > VARIABLE_CAP:
        raise SizeCapExceeded(f"{p.nvars} variables exceed cap {VARIABLE_CAP}")
    a = _pencil_matrix(p)
    if p.size < 5:
        return _cofactor_det(a, p.nvars)
    return _bareiss_det(a, p.nvars)


def _check_block_shape(d: RationalMatrix) -> None:
    if d.rows != d.cols or d.rows == 0:
        raise ShapeError("D must be square and nonempty")
    if d[0, 0] != 1:
        raise ShapeError("D[0][0] must be 1")
    if any(d[0, j] for j in range(1, d.cols)) or any(d[i, 0] for i in range(1, d.rows)):
        raise ShapeError("first row and column of D must vanish off the corner")


def block_matrix(b: RationalMatrix) -> RationalMatrix:
    """``D = diag(1, B)``."""
    m = b.rows
    rows = [[1] + [0] * m]
    for i in range(m):
        rows.append([0] + list(b.row(i)))
    return RationalMatrix.from_rows(rows, cols=m + 1)


def substitute_base_change(f: SparsePoly, d: RationalMatrix) -> SparsePoly:
    """``f(zD)`` where ``z`` is the row vector (z0, ..., zm)."""
    _check_block_shape(d)
    if d.rows != f.nvars:
        raise ShapeError(f"D is {d.rows}x{d.cols}, polynomial has {f.nvars} variables")
    # (zD)_j = sum_i z_i D[i][j]
    images = [SparsePoly.linear([d[i, j] for i in range(d.rows)]) for j in range(d.cols)]
    return f.substitute(images)


def verify_base_change(p: MatrixPencil, b: RationalMatrix) -> bool:
    m = len(p.generators)
    if b.rows != m or b.cols != m:
        raise ShapeError(f"B must be {m}x{m}")
    if rank_over_rationals(b) < m:
        raise SingularB("base change matrix is singular")
    lhs = det_pencil(p.transformed(b))
    rhs = substitute_base_change(det_pencil(p), block_matrix(b))
    return lhs == rhs


def random_unimodular(m: int, rng: random.Random, steps: int = 6, bound: int = 2) -> RationalMatrix:
    """Random integer matrix of determinant +-1, built from elementary moves."""
    a = [[int(i == j) for j in range(m)] for i in range(m)]
    for _ in range(steps):
        i, j = rng.sample(range(m), 2) if m > 1 else (0, 0)
        if i != j:
            c = rng.choice([k for k in range(-bound, bound + 1) if k])
            a[i] = [x + c * y for x, y in zip(a[i], a[j])]
    if rng.random() < 0.5:
        rng.shuffle(a)
    if rng.random() < 0.5:
        a[0] = [-x for x in a[0]]
    return RationalMatrix.from_rows(a, cols=m)


def sl2_closed_form(m: int) -> SparsePoly:
    """The product formula for det of the (m+1)-dimensional irreducible pencil.

    ``z0 * prod_{l=1}^{m/2} (z0^2 - 4 l^2 q)`` for even m and
    ``prod_{l=0}^{(m-1)/2} (z0^2 - (2l+1)^2 q)`` for odd m, with q = z1^2 + z2 z3.
    """
    z0 = SparsePoly.var(4, 0)
    q = SparsePoly.var(4, 1) ** 2 + SparsePoly.var(4, 2) * SparsePoly.var(4, 3)
    if m % 2 == 0:
        out = z0
        for l in range(1, m // 2 + 1):
            out = out * (z0 * z0 - q * (4 * l * l))
    else:
        out = SparsePoly.constant(4, 1)
        for l in range(0, (m - 1) // 2 + 1):
            out = out * (z0 * z0 - q * ((2 * l + 1) ** 2))
    return out


def quadratic_factor_product(d: dict[int, int]) -> SparsePoly:
    """``z0^d[0] * prod_{n>=1} (z0^2 - n^2 (z1^2 + z2 z3))^d[n]``."""
    z0 = SparsePoly.var(4, 0)
    q = SparsePoly.var(4, 1) ** 2 + SparsePoly.var(4, 2) * SparsePoly.var(4, 3)
    out = z0 ** d.get(0, 0)
    for n, k in sorted(d.items()):
        if n >= 1 and k:
            out = out * (z0 * z0 - q * (n * n)) ** k
    return out


def randomized_base_change_checks(ms: Sequence[int], trials: int, seed: int) -> list[tuple[int, bool]]:
    rng = random.Random(seed)
    out = []
    for t in range(trials):
        m = ms[t % len(ms)]
        b = random_unimodular(3, rng)
        out.append((m, verify_base_change(sl2_matrices(m), b)))
    return out
