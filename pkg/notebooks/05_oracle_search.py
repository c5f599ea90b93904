# %% [markdown]
# # Exhaustive search as an independent check
#
# The oracle knows nothing about the constructions. Where it finishes, its
# verdict can be compared with the existence rule.

# %%
import itertools

from rcfd import exists
from rcfd.oracle import exhaustive_exists, find_mols_pair

for params in [(2, 2, 2, 2), (2, 2, 6, 2), (2, 2, 10, 2), (2, 6, 6, 2)]:
    out = exhaustive_exists(*params, time_limit=20)
    print(params, out.status.value, out.nodes_explored, "nodes")

# %%
agree = total = 0
for k, q, m, n in itertools.product((1, 2), (2, 3), range(1, 7), range(1, 7)):
    out = exhaustive_exists(k, m, n, q, time_limit=20)
    total += 1
    agree += out.found == bool(exists(k, m, n, q))
print(f"agreement {agree}/{total}")

# %% [markdown]
# Orthogonal Latin squares of order 10 through a transversal search.

# %%
out = find_mols_pair(10, time_limit=30)
print(out.status.value, "after", out.nodes_explored, "square(s)")
print(out.design.grid[:, :, 0])
