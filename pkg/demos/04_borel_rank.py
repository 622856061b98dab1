"""Borel subalgebras: the characteristic polynomial splits into linear factors.

One factor per positive root; its coefficients are Cartan integers. The
matrix of those coefficients always has rank equal to the rank of the algebra.
"""
from liecp.borel import borel_factors, spectral_matrix, spectral_rank
from liecp.rootsys import build, supported_types

a2 = build("A", 2)
print("A2 factors:", borel_factors(a2).to_json())
for row in spectral_matrix(a2).matrix.to_rows():
    print("  ", [str(x) for x in row])

for fam, n in supported_types():
    rs = build(fam, n)
    print(f"{rs.name}: {spectral_matrix(rs).size}x{spectral_matrix(rs).size}, rank {spectral_rank(rs)}")
