"""Walk through the filtration of a hook permutation module.

Builds the layers for (4,1^5) on the cyclic quiver with e = 10, prints the
dimensions, weights and residue diagrams, then checks a smaller hook against
span computations inside the module itself.
"""

from klrspecht import Quiver, hook_filtration, verify_filtration
from klrspecht.cartan import format_weight
from klrspecht.cli import residue_diagram
from klrspecht.partitions import dim_perm

q = Quiver.affine(10)
layers = hook_filtration(4, 5, q, 0)

print(f"dim M^(4,1^5) = {dim_perm((4, 1, 1, 1, 1, 1))}")
for L in layers:
    print(f"layer {L.index}: {str(L.shape):<12} dim {L.dim:>5}   {format_weight({}, L.charges, q)}")
print("sum of layers:", sum(L.dim for L in layers))

print("\nresidues of the last layer:")
print(residue_diagram(layers[-1].shape, q, layers[-1].charges))

# the engine computes dim M_i by closing the Garnir generators under the algebra
small = (3, 1, 1, 1)
q4 = Quiver.affine(4)
report = verify_filtration(hook_filtration(3, 3, q4), small, q4)
print(f"\n{small} over e=4: span dims {report.span_dims}, predicted layers {report.predicted}, ok={report.ok}")
