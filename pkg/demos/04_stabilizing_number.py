"""
Stabilizing numbers and genus bounds
====================================

If a disc does not exist in ``N``, it may appear after adding copies of
``S^2 x S^2``. The stabilizing number counts how many are needed; the same
signature data bounds the genus of surfaces representing ``x``.
"""

# %%
from simpleslice import genus_lower_bound, get_knot, max_signature_bound, preset, stabilize, stabilizing_number
from simpleslice.form import pad_class

cp2 = preset("CP2")
P = get_knot("T(-2,5)")

sn = stabilizing_number(cp2, (11,), P)
print(sn.value, sn.exactness.value, "max |sigma_j| =", max_signature_bound(cp2, (11,), P))

# %%
# Each stabilization lowers the number by one.
for k in (0, 1, 10, 27, 30):
    Nk = stabilize(cp2, k)
    print(k, stabilizing_number(Nk, pad_class((11,), 2 * k), P).value)

# %%
# 11 is prime, so the same bound holds for every embedded surface, not
# just those with cyclic complement.
g = genus_lower_bound(cp2, (11,), P)
print(g.value, g.scope.value)

# %%
# When the parity condition fails the number is infinite, and only the
# signature lower bound is reported.
print(stabilizing_number(cp2, (7,), P).as_dict())
