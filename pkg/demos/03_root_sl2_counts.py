"""Restricting the adjoint representation to the sl(2) of a root.

Pairing every root with a chosen root lam gives the eigenvalues of ad H_lam.
The counts k0..k3 fix the adjoint characteristic polynomial as an sl(2)
module, and are compared here with the published table.
"""
from liecp.rootsys import build
from liecp.sl2embed import embed_charpoly, embed_report

for fam, n in [("G", 2), ("F", 4), ("C", 4), ("D", 5), ("E", 8)]:
    rs = build(fam, n)
    for cls in rs.root_length_classes():
        r = embed_report(rs, cls)
        k = [r.k_roots[i] for i in range(4)]
        verdict = "agrees" if r.fully_matches() else f"differs {r.matches_table1}"
        print(f"{rs.name:3s} {cls:5s} k={k} k0+cartan={r.k0_total} dim={r.dim_L}  table {verdict}")
        assert r.identity_holds()

print("\n" + str(embed_charpoly(embed_report(build("G", 2), "short"))))
