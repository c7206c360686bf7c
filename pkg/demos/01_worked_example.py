"""
The reference key over Z_313
============================

Six T-quasigroups, three orthogonal systems, leaders (110, 210).  Running
the plaintext 56; 43; 105; 59; 61; 19 through the key prints every
intermediate translation and ends with the ciphertext and its decryption.
"""

from qgcipher.worked import PRINTED_PARASTROPHES, QUASIGROUPS, run_demo

ok = run_demo()

# The decryption side uses one parastrophe per quasigroup: (13) undoes a
# right translation and (23) undoes a left one.
print()
for i, s, triple in PRINTED_PARASTROPHES:
    q, kind = QUASIGROUPS[i]
    print(f"g{i + 1} ({kind.value}) -> parastrophe {s.value}: {q.parastrophe(s).params}  expected {triple}")

raise SystemExit(0 if ok else 1)
