# %% [markdown]
# # A gap in a type B tensor support
#
# The 7-dimensional vector representation of so(7) has highest weight
# omega_1. Its tensor square splits into the symmetric and exterior parts,
# and the symmetric part contains the trivial summand.

# %%
from lieconvex import build_root_system, check_line, tensor_decompose, weyl_dim

B3 = build_root_system("B", 3)
w1 = B3.fundamental(0)
square = tensor_decompose(B3, w1, w1)
for nu, c in sorted(square.items(), reverse=True):
    print(nu, c, weyl_dim(B3, nu))

# %% [markdown]
# omega_1 is itself a short root, so 0, omega_1 and 2*omega_1 lie on one
# root-lattice line. Both ends occur, the middle does not.

# %%
witness = check_line(B3, square, B3.zero(), w1, 2)
print(witness.occupancies, witness.status)

# %% [markdown]
# The same happens one rank lower. Note the exterior square of the B2 vector
# representation is labelled 2*omega_2 here.

# %%
B2 = build_root_system("B", 2)
print(tensor_decompose(B2, (1, 0), (1, 0)))
