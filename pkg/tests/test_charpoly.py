import random

import pytest
import sympy

from liecp.acceptance import random_decomposition
from liecp.charpoly import (CharPoly, LinearFactors, expand_small, factored_text, linearize,
                            product_on_charpoly, resolution_product, trivial)
from liecp.errors import CapExceeded, TagMismatch
from liecp.rootsys import build
from liecp.weights import Decomposition

A1 = ("A", 1)


def lf(entries, tag=A1):
    return LinearFactors(entries, tag)


def as_sympy(poly):
    zs = sympy.symbols(f"z0:{poly.nvars}")
    return sympy.expand(sum(sympy.Rational(c.numerator, c.denominator)
                            * sympy.prod(z ** e for z, e in zip(zs, exps))
                            for exps, c in poly.sorted_terms())), zs


def test_linearize_examples():
    a1 = build("A", 1)
    assert linearize(a1, CharPoly.of(a1, [(2,)])) == lf({(2,): 1, (0,): 1, (-2,): 1})
    assert linearize(a1, trivial(a1)) == lf({(0,): 1})
    a2 = build("A", 2)
    got = linearize(a2, CharPoly.of(a2, [(1, 0)]))
    assert got.entries == {(1, 0): 1, (-1, 1): 1, (0, -1): 1}


def test_resolution_product_examples():
    v1 = lf({(1,): 1, (-1,): 1})
    v2 = lf({(2,): 1, (0,): 1, (-2,): 1})
    assert resolution_product(v1, v1) == lf({(2,): 1, (0,): 2, (-2,): 1})
    assert resolution_product(v2, v1) == lf({(3,): 1, (1,): 2, (-1,): 2, (-3,): 1})
    assert resolution_product(v2, lf({(0,): 1})) == v2
    with pytest.raises(TagMismatch):
        resolution_product(v1, LinearFactors({(0, 0): 1}, ("A", 2)))


def test_product_on_charpoly_examples():
    a1 = build("A", 1)
    v1 = CharPoly.of(a1, [(1,)])
    assert product_on_charpoly(a1, v1, v1).decomposition == Decomposition({(2,): 1, (0,): 1}, A1)
    assert product_on_charpoly(a1, v1, trivial(a1)) == v1
    a2 = build("A", 2)
    got = product_on_charpoly(a2, CharPoly.of(a2, [(1, 0)]), CharPoly.of(a2, [(0, 1)]))
    assert got == CharPoly.of(a2, {(1, 1): 1, (0, 0): 1})
    assert got.dim(a2) == 9


def test_expand_small_examples():
    assert str(expand_small(lf({(2,): 1, (0,): 1, (-2,): 1}))) == "z0^3 - 4*z0*z1^2"
    assert str(expand_small(lf({(1,): 1, (-1,): 1}))) == "z0^2 - z1^2"
    assert str(expand_small(lf({(0,): 5}))) == "z0^5"
    with pytest.raises(CapExceeded):
        expand_small(lf({(0,): 65}))


@pytest.mark.parametrize("tag", [("A", 2), ("B", 2), ("G", 2)])
def test_expand_small_against_sympy(tag):
    rs = build(*tag)
    a = linearize(rs, CharPoly.of(rs, [(1, 0)]))
    got, zs = as_sympy(expand_small(a))
    want = sympy.expand(sympy.prod((zs[0] + sum(c * z for c, z in zip(w, zs[1:]))) ** m
                                   for w, m in a.entries.items()))
    assert got == want


def test_expansion_is_multiplicative():
    rng = random.Random(2)
    for tag in [("A", 1), ("A", 2), ("B", 2)]:
        rs = build(*tag)
        for _ in range(5):
            a = linearize(rs, CharPoly(random_decomposition(rng, rs, 8)))
            b = linearize(rs, CharPoly(random_decomposition(rng, rs, 8)))
            ab = resolution_product(a, b)
            assert ab.total() == a.total() * b.total()
            assert expand_small(a).degree() + expand_small(b).degree() == a.total() + b.total()
            assert expand_small(a) * expand_small(b) == expand_small(a.union(b))


def test_monoid_laws():
    rng = random.Random(9)
    for tag in [("A", 1), ("A", 3), ("C", 3), ("G", 2)]:
        rs = build(*tag)
        unit = linearize(rs, trivial(rs))
        for _ in range(8):
            a, b, c = (linearize(rs, CharPoly(random_decomposition(rng, rs, 20))) for _ in range(3))
            assert resolution_product(a, resolution_product(b, c)) == \
                resolution_product(resolution_product(a, b), c)
            assert resolution_product(a, b) == resolution_product(b, a)
            assert resolution_product(unit, a) == a


def test_round_trip():
    rng = random.Random(4)
    for tag in [("A", 2), ("D", 4), ("B", 3)]:
        rs = build(*tag)
        for _ in range(10):
            f = CharPoly(random_decomposition(rng, rs, 100))
            assert product_on_charpoly(rs, f, trivial(rs)) == f


def test_factored_text():
    assert factored_text(lf({(2,): 1, (0,): 1, (-2,): 1})) == "(z0 + 2*z1) * z0 * (z0 - 2*z1)"
    assert factored_text(lf({(1,): 2})) == "(z0 + z1)^2"


def test_charpoly_json():
    a2 = build("A", 2)
    assert CharPoly.of(a2, [(1, 0), (1, 0)]).to_json() == [{"highest": [1, 0], "mult": 2}]
