"""
Parastrophes and translations of a small T-quasigroup
=====================================================

Over Z_7 everything fits on screen, so we can compare the closed-form
parastrophes against tables obtained by permuting the roles of
(x1, x2, x3), and check the translation identities cell by cell.
"""

import numpy as np

from qgcipher import TQuasigroup
from qgcipher.quasigroup import Parastrophe
from qgcipher.verify import TABLE1, cayley, parastrophe_table, table1_cells

q = TQuasigroup(3, 5, 2, 7)
t = cayley(q)
print("x*y = 3x + 5y + 2 (mod 7)")
print(t)

# %%
# Closed forms versus relabelled tables
for s in Parastrophe:
    closed = q.parastrophe(s)
    same = np.array_equal(closed.cayley_table(), parastrophe_table(t, s))
    print(f"{s.value:>4}: {closed.params}  table match: {same}")

# %%
# Each cell says: translation <row> of the parastrophe equals translation
# <entry> of q itself.
cells = table1_cells(q)
print()
print("      " + "".join(f"{s:>6}" for s in TABLE1["R"]))
for row, cols in TABLE1.items():
    marks = "".join(f"{cols[s] + ('' if cells[row, s] else '!'):>6}" for s in cols)
    print(f"{row:>5} {marks}")
print("all 36 cells hold:", all(cells.values()))

# %%
# Powers of a translation stay affine in both the input and the leader,
# which is what makes long chains cheap: T_l^k(x) = a*x + b*l + k0.
leader, x = 4, 1
for kind in ("L", "R", "P"):
    a, b, k0 = q.translation_affine(kind, 3)
    direct = q.translate_pow(kind, leader, 3, x)
    print(f"{kind}^3: {a}x + {b}l + {k0}  -> {(a * x + b * leader + k0) % 7} (stepwise {direct})")
