"""
Deciding simple discs
=====================

Given a manifold ``N``, a class ``x`` and a knot ``K``, the engine decides
whether ``K`` bounds a locally flat disc in ``N`` representing ``x`` whose
complement has cyclic fundamental group. Every answer comes with the
conditions that were checked.
"""

# %%
from simpleslice import decide_simple_slice, decide_stably_slice, get_knot, preset, sigma_j

cp2 = preset("CP2")
P = get_knot("T(-2,5)")

verdict = decide_simple_slice(cp2, (3,), P)
print(verdict.answer.value)
for r in verdict.reasons:
    print(" ", r.condition, r.passed, "actual", r.actual, "required", r.required)

# %%
# The bound comes from the numbers sigma_j, one per d-th root of unity.
print([sigma_j(cp2, (3,), P, j) for j in range(3)])

# %%
# In the class 7 the parity condition already fails, so no number of
# stabilizations can help.
print(decide_stably_slice(cp2, (7,), P).answer.value)

# %%
# When the branched cover has nontrivial homology the necessary conditions
# may pass without settling existence, and the answer is Inconclusive.
v = decide_simple_slice(cp2, (2,), get_knot("trefoil_left"))
print(v.answer.value, [(r.condition, r.passed) for r in v.reasons])

# %%
# In K3 the class of a primitive ordinary sphere bounds a disc for every
# knot in the bundled table.
from simpleslice import find_primitive_ordinary_class, load_knot_table

k3 = preset("K3")
e = find_primitive_ordinary_class(k3)
print({rec.name: decide_simple_slice(k3, e, rec.seifert_matrix).answer.value for rec in load_knot_table()})
