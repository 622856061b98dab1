"""Tensor products without tensors.

A representation is remembered only through the linear factors of its
characteristic polynomial restricted to the Cartan, i.e. its weights. Adding
weights pairwise and peeling off highest weights recovers the decomposition
of a tensor product.
"""
from liecp import CharPoly, build, linearize, product_on_charpoly, resolution_product
from liecp.charpoly import factored_text

a1 = build("A", 1)
v1 = CharPoly.of(a1, [(1,)])
print("V(1) restricted:", factored_text(linearize(a1, v1)))
square = resolution_product(linearize(a1, v1), linearize(a1, v1))
print("pairwise sums:   ", factored_text(square))
print("V(1) x V(1) =", product_on_charpoly(a1, v1, v1).to_json())

a2 = build("A", 2)
adj = CharPoly.of(a2, [(1, 1)])
prod = product_on_charpoly(a2, adj, adj)
print("\nsl(3): 8 x 8 =")
for entry in prod.to_json():
    print(f"  {entry['mult']} x V({entry['highest']})")
print("total dimension", prod.dim(a2))
