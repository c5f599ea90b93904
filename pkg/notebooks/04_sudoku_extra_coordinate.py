# %% [markdown]
# # Sudoku squares and one extra coordinate
#
# A Sudoku-type Latin square of order q1*q2 has every symbol once in each
# residue class of cells. Blown up and laid over a tiled base design, it adds
# one coordinate without breaking regularity.

# %%
from rcfd import sudoku_latin, theorem32, theorem36
from rcfd.sudoku import split_factors

L = sudoku_latin(2, 3)
print(L.grid[:, :, 0])
print("residue class (0,0):", sorted(L.grid[0::2, 0::3, 0].ravel()))

# %%
base = theorem32(4, 1, 1)          # I_2(4,4;4)
print("split of 4 for b1=b2=2:", split_factors(2, 2, 4))
D = theorem36(base, 2, 2)           # I_3(8,8;4)
print(D.params, D.is_regular)

# %%
for q, M, N, b1, b2 in [(3, 1, 1, 3, 1), (2, 1, 2, 1, 2), (4, 1, 2, 4, 1)]:
    E = theorem36(theorem32(q, M, N), b1, b2)
    print(E.params, E.is_regular)
