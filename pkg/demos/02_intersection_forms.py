"""
Intersection forms
==================

A punctured 4-manifold is described by its unimodular intersection form and
a Kirby-Siebenmann bit. Presets cover the usual examples; sums and
stabilizations are built from them.
"""

# %%
from simpleslice import (
    IntersectionForm,
    find_primitive_ordinary_class,
    from_descriptor,
    is_characteristic,
    preset,
    self_intersection,
    signature,
    stabilize,
)

for name in ("CP2", "CP2bar", "S2xS2", "E8", "K3"):
    Q = preset(name)
    print(f"{name:7} b2={Q.b2:2} sigma={signature(Q):4} even={Q.is_even()} ks={Q.ks}")

# %%
# Classes in CP2 alternate between characteristic (odd) and ordinary (even).
cp2 = preset("CP2")
print([(x, is_characteristic(cp2, (x,))) for x in range(1, 6)])

# %%
# Connected sums add signature and rank. The JSON descriptor used by the
# command line builds the same thing.
N = from_descriptor({"sum": ["CP2", "CP2bar", {"matrix": [[0, 1], [1, 0]], "ks": 0}]})
print(N.b2, signature(N), signature(stabilize(N, 3)))

# %%
# A primitive ordinary class exists exactly when the form is even or has
# rank at least two.
print(find_primitive_ordinary_class(N), find_primitive_ordinary_class(cp2))

# %%
# For a characteristic class the difference of signature and square is a
# multiple of 8.
x = (3, 1, 0, 0)
print(is_characteristic(N, x), (signature(N) - self_intersection(N, x)) % 8)

# %%
# Forms are validated: a degenerate matrix is rejected.
from simpleslice import InvalidForm

try:
    IntersectionForm([[2, 1], [1, 2]])
except InvalidForm as exc:
    print("rejected:", exc)
