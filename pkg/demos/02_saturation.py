# %% [markdown]
# # Stretching invariants
#
# For SL(n) a triple with no invariants stays invariant-free under stretching.
# In type B this fails already for three copies of the vector representation.

# %%
from lieconvex import build_root_system, saturation_probe
from lieconvex.convexity import saturation_holds

B3 = build_root_system("B", 3)
profile = saturation_probe(B3, [(1, 0, 0)] * 3, 3)
print(profile, saturation_holds(profile))

# %%
A2 = build_root_system("A", 2)
profile = saturation_probe(A2, [(1, 0)] * 3, 3)
print(profile, saturation_holds(profile))

# %% [markdown]
# The type A side can be cross-checked with LR coefficients.

# %%
from lieconvex import stretch_probe

print(stretch_probe((2, 1), (2, 1), (3, 2, 1), 3))
