# %% [markdown]
# # Littlewood-Richardson tableaux and Kostka numbers

# %%
from lieconvex.lrcomb import kostka, lr_coefficient, lr_product, lr_tableaux

print(lr_product((2, 1), (2, 1), 3))
for t in lr_tableaux((3, 2, 1), (2, 1), (2, 1)):
    print(t.entries, t.reading_word())

# %%
print(lr_coefficient((4, 2), (4, 2), (6, 4, 2)))
print(kostka((3, 2, 1), (2, 2, 2)))

# %% [markdown]
# Kostka numbers along e_i - e_j moves of the content are log-concave.

# %%
from lieconvex.convexity import kostka_log_concavity_scan

print(kostka_log_concavity_scan((4, 2, 1), 4))
