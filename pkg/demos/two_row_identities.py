"""Evaluate the two-row Garnir elements of M^(3,3) and watch the step identity.

Applying psi_s ... psi_{k+s} to the element attached to the Garnir node (1,s)
lands on minus the element for (1,s+1); the elements are printed in the
row-standard tableau basis.
"""

from klrspecht import ModuleContext, Quiver, garnir_element, span, verify_identity
from klrspecht.modules import eval_word, psi_word
from klrspecht.partitions import Node

k, r = 3, 3
ctx = ModuleContext((k, r), Quiver.linear())
print(f"M^({k},{r}) has dimension {ctx.dim}")

B = {s: garnir_element(Node(1, 1, s), ctx) for s in range(1, r + 1)}
for s in range(1, r):
    lhs = eval_word(psi_word(range(s, k + s + 1)), ctx, B[s])
    print(f"\ns = {s}")
    print("  step applied to B_s :", lhs)
    print("  -B_(s+1)            :", -B[s + 1])
    print("  equal:", lhs == -B[s + 1])

generated = span([B[1]], ctx)
print(f"\nsubmodule generated by B_1 has dimension {generated.dimension}")
print("contains every B_s:", all(generated.contains(b) for b in B.values()))

for key in ("thm5.4", "lemma5.3", "lemma5.10", "cor5.6"):
    print(f"{key:>10}: {verify_identity(key, (k, r)).holds}")
