from collections import Counter

import pytest

from liecp.errors import NoSuchRootClass, NotACharacter
from liecp.rootsys import build
from liecp.sl2embed import (Sl2CharPoly, audit_json, audit_markdown, embed_charpoly, embed_report,
                            k_counts, sl2_dims, table1_audit)
from liecp.acceptance import load_golden_audit
from liecp.weights import WeightMultiset, irrep_weights
from liecp.oracle import det_pencil, sl2_matrices


def k(report):
    return [report.k_roots[i] for i in range(4)]


def test_g2_reports():
    g2 = build("G", 2)
    long_ = embed_report(g2, "long")
    assert k(long_) == [2, 4, 1, 0] and long_.k0_total == 4 and long_.identity_holds()
    assert long_.fully_matches()
    short = embed_report(g2, "short")
    assert k(short) == [2, 2, 1, 2] and short.k0_total == 4 and short.identity_holds()
    assert embed_charpoly(long_).d == {0: 4, 1: 4, 2: 1}


def test_c3_reports():
    c3 = build("C", 3)
    long_ = embed_report(c3, "long")
    assert k(long_) == [8, 4, 1, 0] and long_.k0_total == 11 and long_.dim_L == 21
    assert long_.matches_table1["k1"] is False
    short = embed_charpoly(embed_report(c3, "short"))
    assert short.d == {0: 7, 1: 4, 2: 3}


def test_e8_and_b2_rows():
    e8 = embed_report(build("E", 8))
    assert k(e8) == [126, 56, 1, 0] and e8.k0_total == 134 and e8.dim_L == 248
    assert e8.matches_table1 == {**e8.matches_table1, "k0": True, "k1": False, "k2": False,
                                 "k1+k2": True}
    b2 = embed_report(build("B", 2), "short")
    assert k(b2) == [2, 0, 3, 0] and b2.k0_total == 4 and b2.matches_table1["k2"] is False


def test_a1_is_the_adjoint():
    assert embed_charpoly(embed_report(build("A", 1))).d == {0: 1, 2: 1}


def test_sl2_dims_examples():
    a1 = build("A", 1)
    assert sl2_dims(irrep_weights(a1, (2,))).d == {0: 1, 2: 1}
    assert sl2_dims(irrep_weights(a1, (3,))).d == {1: 1, 3: 1}
    assert sl2_dims(irrep_weights(a1, (0,))).d == {0: 1}
    with pytest.raises(NotACharacter):
        sl2_dims(WeightMultiset({(2,): 1}, a1.tag))


def test_sl2_charpoly_matches_oracle():
    for m in range(6):
        got = sl2_dims(irrep_weights(build("A", 1), (m,))).to_sparse()
        assert got == det_pencil(sl2_matrices(m))


def test_class_invariance(rs):
    for cls, roots in rs.root_length_classes().items():
        counts = {tuple(sorted(k_counts(rs, r).items())) for r in roots}
        assert len(counts) == 1, cls


def test_report_properties(any_rs):
    n_roots = len(any_rs.roots)
    for cls in any_rs.root_length_classes():
        r = embed_report(any_rs, cls)
        assert r.identity_holds()
        assert r.dim_L == n_roots + any_rs.rank
        assert r.k_roots[0] + 2 * (r.k_roots[1] + r.k_roots[2] + r.k_roots[3]) == n_roots
        if any_rs.tag != ("G", 2) or cls == "long":
            assert r.k_roots[3] == 0
        if any_rs.family in "ADE":
            assert r.k_roots[2] == 1
        assert embed_charpoly(r).degree() == r.dim_L


def test_missing_class():
    with pytest.raises(NoSuchRootClass):
        embed_report(build("E", 6), "short")


def test_audit_matches_golden_file():
    assert audit_json() == load_golden_audit()


def test_audit_markdown_lists_every_row():
    text = audit_markdown()
    rows = [line for line in text.splitlines() if line.startswith("|")]
    assert len(rows) == len(table1_audit()) + 2
    assert "| C_n | C3 | long |" in text and "MISMATCH" in text


def test_a_rows_under_both_readings():
    readings = Counter(r.table1_reading for r in table1_audit() if r.family == "A")
    assert readings == {"rank": 8, "sl_n": 8}
    assert all(r.fully_matches() for r in table1_audit()
               if r.family == "A" and r.table1_reading == "sl_n")


def test_sl2_charpoly_text():
    assert str(Sl2CharPoly({0: 1, 2: 1})) == "z0^1 * (z0^2 - 4*(z1^2+z2*z3))^1"
