"""The irreducible sl(2) modules as matrix pencils.

For each V(m) we build h, e, f explicitly, take the determinant of
z0*I + z1*h + z2*e + z3*f by exact elimination, and compare it with the
product of quadratic factors predicted from the weights m, m-2, ..., -m.
"""
from liecp.oracle import det_pencil, sl2_closed_form, sl2_matrices, tau

for m in range(6):
    p = sl2_matrices(m)
    f = det_pencil(p)
    print(f"V({m}): {f}")
    assert f == sl2_closed_form(m)
    # swapping e and f while negating h is an automorphism; the determinant cannot notice
    assert det_pencil(tau(p)) == f

print("all determinants agree with the weight prediction")
