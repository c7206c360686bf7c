"""Exit criteria for the package; each test records a PASS/FAIL line in the summary."""

import random
import time
from itertools import product

from qgcipher.cipher import KeySchedule, StepKey, decrypt, encrypt, encrypt_markovski
from qgcipher.codec import Codec
from qgcipher.keyfile import from_dict, keygen
from qgcipher.modring import is_unit_mod
from qgcipher.orthosys import OrthoPair
from qgcipher.quasigroup import NONTRIVIAL, Kind, TQuasigroup
from qgcipher.verify import (
    cayley,
    ortho_bruteforce,
    ortho_report,
    parastrophe_table,
    table1_check,
    tables_orthogonal,
    theorem1_check,
)
from qgcipher.worked import (
    CIPHERTEXT,
    PLAINTEXT,
    PRINTED_INVERSES,
    PRINTED_PARASTROPHES,
    QUASIGROUPS,
    SYSTEMS,
    reference_key,
)


def _best_time(fn, repeat=20):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def test_ac01_golden_vector(criterion):
    key = reference_key()
    ct = encrypt(key, PLAINTEXT)
    pt = decrypt(key, ct)
    t_enc = _best_time(lambda: encrypt(key, PLAINTEXT))
    t_dec = _best_time(lambda: decrypt(key, CIPHERTEXT))
    ok = ct == CIPHERTEXT and pt == PLAINTEXT and t_enc < 1e-3 and t_dec < 1e-3
    criterion("1 golden vector", ok, f"ct={ct} pt={pt} enc={t_enc * 1e6:.0f}us dec={t_dec * 1e6:.0f}us")


def test_ac02_intermediate_trace(criterion):
    trace = []
    encrypt(reference_key(), PLAINTEXT, trace=trace)
    got = [(t.odd_chain, t.even_chain, t.f_chain) for t in trace]
    want = [
        ([160, 256, 152], [312], [(126, 171), (130, 44)]),
        ([82], [129, 57, 140], [(98, 193), (152, 282)]),
        ([312, 252, 305], [140, 239], [(115, 118)]),
    ]
    criterion("2 intermediate trace", got == want, str(got))


def test_ac03_parastrophe_constants(criterion):
    got = [QUASIGROUPS[i][0].parastrophe(s).params for i, s, _ in PRINTED_PARASTROPHES]
    want = [triple for _, _, triple in PRINTED_PARASTROPHES]
    criterion("3 parastrophe constants", got == want, str(got))


def test_ac04_inverse_coefficients(criterion):
    rng = random.Random(2024)
    bad = 0
    for F, ((p, q, r), (s, t, u)) in zip(SYSTEMS, PRINTED_INVERSES):
        for _ in range(1000):
            a, b = rng.randrange(313), rng.randrange(313)
            printed = ((p * a + q * b + r) % 313, (s * a + t * b + u) % 313)
            if F.inverse(a, b) != printed:
                bad += 1
    criterion("4 inverse-coefficient agreement", bad == 0, f"{bad} mismatches in 3000")


def test_ac05_theorem2_oracle_equivalence(criterion):
    t0 = time.perf_counter()
    checked = disagreements = 0
    for n in (3, 5, 7, 11):
        for phi, psi, c in product(range(1, n), range(1, n), (0, 1)):
            q = TQuasigroup(phi, psi, c, n)
            t = cayley(q)
            for s in NONTRIVIAL:
                votes = {
                    q.ortho_to_parastrophe(s),
                    ortho_bruteforce(q, q.parastrophe(s)),
                    tables_orthogonal(t, parastrophe_table(t, s)),
                    theorem1_check(q, s),
                }
                checked += 1
                disagreements += len(votes) != 1
    elapsed = time.perf_counter() - t0
    criterion("5 closed-form = brute force = identity check", disagreements == 0 and elapsed < 60,
              f"{checked} cases, {disagreements} disagreements, {elapsed:.1f}s")


def test_ac06_corollary1_soundness(criterion):
    passing = counterexamples = 0
    for n in (5, 7, 11):
        for k, m, c in product(range(1, n), range(1, n), range(n)):
            q = TQuasigroup(k, m, c, n)
            if q.corollary1_check().passed:
                passing += 1
                counterexamples += not ortho_report(q).all_orthogonal
    criterion("6 eight-condition soundness", counterexamples == 0,
              f"{passing} passing quasigroups, {counterexamples} counterexamples")


def test_ac07_table1(criterion):
    rng = random.Random(7)
    failures = total = 0
    for n in (5, 7, 11, 13):
        units = [u for u in range(1, n) if is_unit_mod(u, n)]
        for _ in range(200):
            q = TQuasigroup(rng.choice(units), rng.choice(units), rng.randrange(n), n)
            total += 1
            failures += not table1_check(q)
    criterion("7 translation/parastrophe table", failures == 0, f"{total} quasigroups, {failures} failures")


def test_ac08_roundtrip(criterion):
    rng = random.Random(8)
    bad = 0
    lengths = [10_000] + [2 * rng.randrange(0, 5_001) for _ in range(999)]
    for length in lengths:
        key = from_dict(keygen(rng.getrandbits(64), steps=rng.randint(1, 5)))
        u = [rng.randrange(313) for _ in range(length)]
        bad += decrypt(key, encrypt(key, u)) != u

    F = OrthoPair(TQuasigroup(1, 1, 0, 5), TQuasigroup(1, 4, 0, 5))
    small = KeySchedule(5, (1, 4), (StepKey(TQuasigroup(2, 3, 1, 5), Kind.R, TQuasigroup(3, 1, 4, 5), Kind.L,
                                            (2, 1, 3), F),))
    for u in product(range(5), repeat=4):
        bad += decrypt(small, encrypt(small, list(u))) != list(u)
    criterion("8 roundtrip", bad == 0, f"1000 random + 625 exhaustive, {bad} failures")


def test_ac09_markovski_degeneration(criterion):
    rng = random.Random(9)
    bad = 0
    for _ in range(500):
        q = TQuasigroup(rng.randrange(1, 313), rng.randrange(1, 313), rng.randrange(313), 313)
        key = KeySchedule.markovski(q, rng.randrange(313))
        u = [rng.randrange(313) for _ in range(2 * rng.randrange(0, 200))]
        bad += encrypt_markovski(key, u) != encrypt(key, u)
    criterion("9 markovski degeneration", bad == 0, f"500 streams, {bad} mismatches")


def test_ac10_throughput(criterion):
    key = from_dict(keygen("throughput", steps=3))
    data = random.Random(10).randbytes(1 << 20)
    t0 = time.perf_counter()
    ct = encrypt(key, Codec(313).encode(data))
    elapsed = time.perf_counter() - t0
    criterion("10 throughput 1 MiB", elapsed < 5.0 and len(ct) == 1 << 20, f"{elapsed:.2f}s")
