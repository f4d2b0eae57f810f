# %% [markdown]
# # Scanning tensor supports for lattice-line gaps
#
# Every r-tuple of small dominant weights is decomposed and each root-lattice
# line through two support points is checked for missing interior points.

# %%
import time

from lieconvex import build_root_system, scan_family

for family, rank, r, bound in [("A", 2, 3, 2), ("A", 2, 2, 3), ("B", 2, 2, 1), ("B", 3, 2, 1)]:
    rs = build_root_system(family, rank)
    t = time.perf_counter()
    report = scan_family(rs, r, bound)
    print(f"{rs.name} r={r} bound={bound}: {report.instances_checked} instances, "
          f"{len(report.violations)} violations, {time.perf_counter() - t:.2f}s")

# %% [markdown]
# Random sampling needs a seed, so reruns give the same report.

# %%
A3 = build_root_system("A", 3)
report = scan_family(A3, 3, 2, mode="random", seed=7, count=50)
print(report.instances_checked, report.violations)
