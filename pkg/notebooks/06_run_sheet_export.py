# %% [markdown]
# # Exporting a run sheet
#
# Rows are blocks (say days), columns are plots, and each cell gives the
# levels of the k factors. CSV is the easiest form to hand to a lab.

# %%
import tempfile
from pathlib import Path

from rcfd import generate, read_design, write_design

D, _ = generate(3, 4, 8, 2)
sheet = write_design(D, "csv")
print("\n".join(sheet.splitlines()[:6]))

# %%
path = Path(tempfile.mkdtemp()) / "runs.csv"
path.write_text(sheet)
back = read_design(path, q=2)
print("round trip:", back == D, "regular:", back.is_regular)

# %% [markdown]
# The same from the shell:
#
#     rcfd generate 3 4 8 2 --format csv --out runs.csv
#     rcfd verify runs.csv --q 2
