import random

import pytest
import sympy

from liecp.charpoly import CharPoly, expand_small, linearize
from liecp.errors import ShapeError, SingularB, SizeCapExceeded
from liecp.exactnum import RationalMatrix
from liecp.oracle import (adjoint_sl2_pencil, block_matrix, brackets_hold, det_pencil,
                          random_unimodular, sl2_closed_form, sl2_matrices,
                          substitute_base_change, tau, verify_base_change)
from liecp.poly import SparsePoly
from liecp.rootsys import build


def sympy_det(p):
    zs = sympy.symbols(f"z0:{p.nvars}")
    m = zs[0] * sympy.eye(p.size)
    for z, g in zip(zs[1:], p.generators):
        m += z * sympy.Matrix(g.to_rows())
    return sympy.Poly(m.det(method="berkowitz"), *zs)


def to_sympy(poly):
    zs = sympy.symbols(f"z0:{poly.nvars}")
    return sympy.Poly(sum(sympy.Rational(c.numerator, c.denominator)
                          * sympy.prod(z ** e for z, e in zip(zs, exps))
                          for exps, c in poly.sorted_terms()), *zs)


def test_small_matrices():
    one = sl2_matrices(1)
    h, e, f = one.generators
    assert h == RationalMatrix.from_rows([[1, 0], [0, -1]])
    assert {e, f} == {RationalMatrix.from_rows([[0, 1], [0, 0]]),
                      RationalMatrix.from_rows([[0, 0], [1, 0]])}
    assert all(g.is_zero() and g.rows == 1 for g in sl2_matrices(0).generators)
    assert sl2_matrices(2).generators[0] == RationalMatrix.from_rows(
        [[2, 0, 0], [0, 0, 0], [0, 0, -2]])
    assert all(brackets_hold(sl2_matrices(m)) for m in range(6))


def test_determinant_examples():
    assert str(det_pencil(sl2_matrices(1))) == "z0^2 - z1^2 - z2*z3"
    assert str(det_pencil(sl2_matrices(2))) == "z0^3 - 4*z0*z1^2 - 4*z0*z2*z3"
    assert det_pencil(adjoint_sl2_pencil()) == det_pencil(sl2_matrices(2))


@pytest.mark.parametrize("m", range(9))
def test_against_sympy_and_closed_form(m):
    p = sl2_matrices(m)
    got = det_pencil(p)
    assert got == sl2_closed_form(m)
    assert got.is_homogeneous(m + 1)
    if m <= 6:
        assert to_sympy(got) == sympy_det(p)


@pytest.mark.parametrize("m", range(7))
def test_restriction_matches_linearization(m):
    a1 = build("A", 1)
    restricted = det_pencil(sl2_matrices(m)).restrict([2, 3])
    lin = expand_small(linearize(a1, CharPoly.of(a1, [(m,)])))
    assert restricted == SparsePoly(4, {e + (0, 0): c for e, c in lin.terms.items()})


def test_generic_pencil_against_sympy():
    rng = random.Random(1)
    for size in (3, 5, 6):
        gens = [RationalMatrix.from_rows([[rng.randint(-2, 2) for _ in range(size)]
                                          for _ in range(size)]) for _ in range(2)]
        p = type(sl2_matrices(1))(size, tuple(gens))
        assert to_sympy(det_pencil(p)) == sympy_det(p)


def test_size_cap():
    with pytest.raises(SizeCapExceeded):
        det_pencil(sl2_matrices(12))


def test_substitution_examples():
    f = det_pencil(sl2_matrices(1))
    assert substitute_base_change(f, RationalMatrix.identity(4)) == f
    swap = RationalMatrix.from_rows([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    assert substitute_base_change(f, block_matrix(swap)) == f
    flip = RationalMatrix.from_rows([[-1, 0, 0], [0, 0, 1], [0, 1, 0]])
    assert substitute_base_change(f, block_matrix(flip)) == f
    with pytest.raises(ShapeError):
        substitute_base_change(f, RationalMatrix.from_rows([[1, 1, 0, 0], [0, 1, 0, 0],
                                                            [0, 0, 1, 0], [0, 0, 0, 1]]))


def test_verify_base_change():
    assert verify_base_change(sl2_matrices(2), RationalMatrix.identity(3))
    d = RationalMatrix.from_rows([[2, 0, 0], [0, 3, 0], [0, 0, 5]])
    assert verify_base_change(sl2_matrices(1), d)
    rng = random.Random(8)
    for t in range(50):
        assert verify_base_change(sl2_matrices(t % 4), random_unimodular(3, rng))
    with pytest.raises(SingularB):
        verify_base_change(sl2_matrices(1), RationalMatrix.zeros(3, 3))


@pytest.mark.parametrize("m", range(1, 5))
def test_tau_invariance(m):
    p = sl2_matrices(m)
    assert brackets_hold(tau(p))
    assert det_pencil(tau(p)) == det_pencil(p)
