# %% [markdown]
# # Existence and generation
#
# `exists` answers the yes/no question for I_k(m, n; q) and says why.
# `generate` returns a verified design and the plan that built it.

# %%
from rcfd import exists, generate, verify_design

for params in [(2, 6, 6, 6), (2, 2, 10, 2), (3, 12, 18, 6), (4, 6, 6, 3), (2, 10, 10, 10)]:
    print(params, exists(*params).message)

# %% [markdown]
# A design of type I_3(12,18;6): every one of the 216 vectors appears once,
# and every coordinate is a frequency rectangle on six symbols.

# %%
D, plan = generate(3, 12, 18, 6)
print(verify_design(D).summary())
print(plan.render())

# %% [markdown]
# The plan is plain JSON, so a design can be rebuilt bit for bit elsewhere.

# %%
from rcfd import Plan, execute

rebuilt = execute(Plan.from_json(plan.to_json()))
print("replay identical:", rebuilt == D)

# %% [markdown]
# Largest k for a few shapes.

# %%
from rcfd.solver import max_k

for m, n, q in [(12, 18, 6), (8, 8, 2), (9, 27, 3), (10, 10, 10)]:
    print(f"m={m:2d} n={n:2d} q={q:2d}  max k = {max_k(m, n, q)}")
