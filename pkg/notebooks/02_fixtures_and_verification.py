# %% [markdown]
# # Shipped tables and the verifier
#
# The verifier never raises on a bad grid; it lists every violated count.

# %%
import itertools

from rcfd import components, get_fixture, verify_design, verify_orthogonal
from rcfd.fixtures import FIXTURE_NAMES

for name in FIXTURE_NAMES:
    D = get_fixture(name)
    print(f"{name:12s} {str(D.params):16s} regular={D.is_regular}")

# %% [markdown]
# The printed 6 x 18 table contains two bad cells in column 0. The report
# points straight at them.

# %%
print(verify_design(get_fixture("B18_PRINTED")).summary(limit=12))

# %% [markdown]
# Three pairwise orthogonal frequency squares whose superposition is still not
# a factorial design: orthogonality alone is not enough.

# %%
F = components(get_fixture("THREE_MOFS"))
for a, b in itertools.combinations(range(3), 2):
    print(a, b, verify_orthogonal(F[a], F[b]))
print(verify_design(get_fixture("THREE_MOFS")).summary(limit=4))
