"""General partitions: layers with Specht resolutions, and level-two decomposition numbers.

The layers of M^(5,5,4,2,2) are far too large for the engine, but their
dimensions come straight from the resolutions.  For (3,3,2,2) the first
resolution is checked against decomposition numbers computed from
residue-constrained standard tableaux.
"""

from klrspecht import general_layers, verify_decomposition_chain
from klrspecht.filtration import simple_dim
from klrspecht.partitions import count_std, dim_perm

lam = (5, 5, 4, 2, 2)
layers = general_layers(lam)
print(f"dim M = {dim_perm(lam)}, dim S = {count_std(lam)}")
for L in layers[1:]:
    terms = ", ".join(f"{mu} ({count_std(mu)})" for mu in L.resolution.terms)
    print(f"layer {L.index} [charges {L.charges}]: {terms}  ->  {L.dim}")
print("layers sum to dim M:", sum(L.dim for L in layers) == dim_perm(lam))

print("\nsimple dimensions along the first resolution of (3,3,2,2):")
small = (3, 3, 2, 2)
terms = general_layers(small)[1].resolution.terms
for j, mu in enumerate(terms, start=1):
    print(f"  D^{mu}: {simple_dim(small, j)}")

report = verify_decomposition_chain(small)
print(f"\ndecomposition numbers checked: {report.checked}, deviations: {report.deviations or 'none'}")
