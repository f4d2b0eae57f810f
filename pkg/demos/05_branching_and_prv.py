# %% [markdown]
# # Branching and PRV components

# %%
from lieconvex import branch_gl_to_gl, build_root_system, prv_components, tensor_decompose
from lieconvex.convexity import branching_violations

print(branch_gl_to_gl((3, 1, 0), 3))
print(branching_violations((3, 1, 0), 3))

# %%
B3 = build_root_system("B", 3)
lam, mu = (1, 0, 1), (0, 1, 0)
prv = prv_components(B3, lam, mu)
d = tensor_decompose(B3, lam, mu)
print(sorted(prv), all(d.get(nu, 0) >= 1 for nu in prv))
