"""
Knot invariants from a Seifert matrix
=====================================

A knot enters the library as an integer Seifert matrix ``V``. From it we get
the Alexander polynomial, the determinant, the Arf invariant, signatures at
roots of unity, and the homology of cyclic branched covers.
"""

# %%
# Start with the right-handed trefoil.
from simpleslice import (
    SeifertMatrix,
    alexander_polynomial,
    arf_invariant,
    branched_cover_h1_order,
    knot_determinant,
    levine_tristram_signature,
    mirror,
)

trefoil = SeifertMatrix([[-1, 1], [0, -1]])
print("Alexander:", alexander_polynomial(trefoil))
print("determinant:", knot_determinant(trefoil), " Arf:", arf_invariant(trefoil))

# %%
# The classical signature is the Levine-Tristram signature at -1, which is
# ``j=1, d=2``. Mirroring flips its sign.
print("sigma(-1):", levine_tristram_signature(trefoil, 1, 2))
print("mirror sigma(-1):", levine_tristram_signature(mirror(trefoil), 1, 2))

# %%
# A signature function on the circle. Here ``T(2,5)`` is sampled at the
# 11th roots of unity. Each value is exact: a floating-point eigenbasis is
# checked with integer arithmetic before the sign count is trusted.
t25 = mirror(SeifertMatrix([[-1, 1, 0, 0], [0, -1, 1, 0], [0, 0, -1, 1], [0, 0, 0, -1]]))
print([levine_tristram_signature(t25, j, 11) for j in range(11)])

# %%
# Where the Alexander polynomial vanishes the signature is undefined, and
# the library refuses rather than guessing. ``T(2,5)`` has roots at the
# primitive 10th roots of unity.
from simpleslice import SingularAtRoot

try:
    levine_tristram_signature(t25, 1, 10)
except SingularAtRoot as exc:
    print("refused:", exc)

# %%
# Branched covers. The 2-fold cover of the trefoil is the lens space L(3,1);
# the 6-fold cover has infinite first homology, reported as 0.
for d in (2, 3, 6):
    print(d, branched_cover_h1_order(trefoil, d))
