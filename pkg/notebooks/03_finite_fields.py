# %% [markdown]
# # Designs from linear forms over a finite field
#
# Choosing M+N independent linear forms, each touching both the row and the
# column variables, gives an I_{M+N}(q^M, q^N; q) with every vector once.

# %%
import numpy as np

from rcfd.gf import build_field, find_irreducible
from rcfd.polyfield import check_coefficients, evaluate_design, lemma31_matrix

F = build_field(4)
print(F, "modulus", find_irreducible(2, 2))
print("addition\n", F.add)
print("multiplication\n", F.mul)

# %%
C = lemma31_matrix(4, 1, 2)
print(np.array(C.rows))
print("problems:", check_coefficients(C, F) or "none")

# %%
D = evaluate_design(C, F)
print(D.params, "regular:", D.is_regular, "replication:", D.params.replication)
print(D.grid[:, :, 0])
