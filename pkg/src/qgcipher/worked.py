"""The reference key over Z_313 and a transcript of running it end to end."""

from __future__ import annotations

from .cipher import KeySchedule, StepKey, decrypt, encrypt
from .codec import format_symbols
from .keyfile import to_dict
from .orthosys import OrthoPair
from .quasigroup import Kind, Parastrophe, TQuasigroup

P = 313
PLAINTEXT = [56, 43, 105, 59, 61, 19]
CIPHERTEXT = [130, 44, 152, 282, 115, 118]
LEADERS = (110, 210)
POWERS = ((3, 1, 2), (1, 3, 2), (3, 2, 1))

QUASIGROUPS = [
    (TQuasigroup(25, 37, 11, P), Kind.R),
    (TQuasigroup(75, 39, 100, P), Kind.L),
    (TQuasigroup(127, 213, 19, P), Kind.L),
    (TQuasigroup(151, 301, 199, P), Kind.R),
    (TQuasigroup(213, 3, 9, P), Kind.R),
    (TQuasigroup(303, 200, 99, P), Kind.L),
]

SYSTEMS = [
    OrthoPair(TQuasigroup(7, 12, 13, P), TQuasigroup(182, 287, 25, P)),
    OrthoPair(TQuasigroup(79, 113, 23, P), TQuasigroup(27, 277, 202, P)),
    OrthoPair(TQuasigroup(81, 101, 99, P), TQuasigroup(228, 134, 277, P)),
]

# F_k^-1(a, b) = (p*a + q*b + r, s*a + t*b + u) as printed alongside each system
PRINTED_INVERSES = [
    ((86, 136, 177), (289, 25, 0)),
    ((216, 52, 178), (162, 152, 0)),
    ((42, 272, 0), (50, 287, 61)),
]

# parastrophes used to invert each translation, with the printed triples
PRINTED_PARASTROPHES = [
    (0, Parastrophe.S13, (288, 299, 275)),
    (1, Parastrophe.S23, (287, 305, 174)),
    (2, Parastrophe.S23, (67, 241, 116)),
    (3, Parastrophe.S13, (199, 197, 150)),
    (4, Parastrophe.S13, (241, 216, 22)),
    (5, Parastrophe.S23, (47, 36, 192)),
]


def reference_key() -> KeySchedule:
    steps = []
    for i, powers in enumerate(POWERS):
        (g_odd, k_odd), (g_even, k_even) = QUASIGROUPS[2 * i], QUASIGROUPS[2 * i + 1]
        steps.append(StepKey(g_odd, k_odd, g_even, k_even, powers, SYSTEMS[i]))
    return KeySchedule(P, LEADERS, tuple(steps))


def reference_key_dict() -> dict:
    return to_dict(reference_key())


def run_demo(echo=print) -> bool:
    """Encrypt and decrypt the reference plaintext, echoing every intermediate value.

    Returns True when both directions reproduce the expected streams.
    """
    key = reference_key()
    echo(f"modulus {P}, leaders {LEADERS[0]}, {LEADERS[1]}")
    for i, (q, kind) in enumerate(QUASIGROUPS, 1):
        echo(f"g{i}: x*y = {q.phi}x + {q.psi}y + {q.c}  ({kind.value} translations)")
    for i, F in enumerate(SYSTEMS, 1):
        f, g = F.first, F.second
        echo(f"F{i}: ({f.phi}x + {f.psi}y + {f.c}, {g.phi}x + {g.psi}y + {g.c})")
    echo(f"plaintext: {format_symbols(PLAINTEXT)}")

    enc_trace = []
    ct = encrypt(key, PLAINTEXT, trace=enc_trace)
    echo("Encryption")
    for t in enc_trace:
        echo(f" Step {t.pair + 1}: leaders {t.leaders}")
        echo(f"  odd  {t.inputs[0]} -> {', '.join(map(str, t.odd_chain))}")
        echo(f"  even {t.inputs[1]} -> {', '.join(map(str, t.even_chain))}")
        echo(f"  F    {' -> '.join(map(str, t.f_chain))}")
    echo(f"ciphertext: {format_symbols(ct)}")

    dec_trace = []
    pt = decrypt(key, ct, trace=dec_trace)
    echo("Decryption")
    for t in dec_trace:
        echo(f" Step {t.pair + 1}: leaders {t.leaders}")
        echo(f"  F^-1 {' -> '.join(map(str, t.f_chain))}")
        echo(f"  odd  -> {', '.join(map(str, t.odd_chain))}")
        echo(f"  even -> {', '.join(map(str, t.even_chain))}")
    echo(f"plaintext: {format_symbols(pt)}")

    ok = ct == CIPHERTEXT and pt == PLAINTEXT
    if not ok:
        echo(f"MISMATCH: expected {format_symbols(CIPHERTEXT)} / {format_symbols(PLAINTEXT)}")
    echo(f"ciphertext: {format_symbols(ct)}")
    echo(f"decrypted: {format_symbols(pt)}")
    return ok
