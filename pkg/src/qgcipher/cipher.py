"""Pairwise quasigroup stream cipher with orthogonal-system mixing.

Each plaintext pair ``(u1, u2)`` is pushed through a powered translation of
one quasigroup per symbol, keyed by two leaders, and the resulting pair is
then mixed by a power of an orthogonal pair ``F``.  Leaders for the next pair
are the ciphertext pair just produced, so decryption reads its leaders
straight from the ciphertext and an error in one ciphertext pair damages at
most two plaintext pairs.

In ``markovski`` mode the schedule degenerates to a single quasigroup with
left translations to the first power and no ``F``; each symbol is then keyed
by the previous ciphertext symbol, the classical chaining.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .modring import ModulusMismatch, Residue
from .orthosys import OrthoPair, Pair
from .quasigroup import Kind, TQuasigroup


class Mode(str, enum.Enum):
    GENERALIZED = "generalized"
    MARKOVSKI = "markovski"


class InvalidKey(ValueError):
    def __init__(self, problems: list[tuple[str, str, str]]):
        self.problems = problems
        super().__init__("; ".join(f"{path}: {msg}" for path, _, msg in problems))


class OddLength(ValueError):
    pass


class WrongMode(ValueError):
    pass


@dataclass(frozen=True)
class StepKey:
    g_odd: TQuasigroup
    kind_odd: Kind
    g_even: TQuasigroup
    kind_even: Kind
    powers: tuple[int, int, int]
    F: OrthoPair | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind_odd", Kind(self.kind_odd))
        object.__setattr__(self, "kind_even", Kind(self.kind_even))
        object.__setattr__(self, "powers", tuple(int(a) for a in self.powers))


def schedule_problems(n: int, leaders, steps, mode: Mode, strict: bool = False) -> list[tuple[str, str, str]]:
    """``(field path, check name, message)`` for every violated invariant.

    Powers must differ within each step; ``strict`` additionally demands
    that no power repeats anywhere in the schedule.
    """
    out = []
    if len(leaders) != 2:
        out.append(("leaders", "leaders", "exactly two leaders required"))
    for j, l in enumerate(leaders):
        if not 0 <= l < n:
            out.append((f"leaders[{j}]", "leaders", f"{l} outside [0, {n})"))
    if not steps:
        out.append(("steps", "steps", "at least one step required"))
    for i, s in enumerate(steps):
        p = f"steps[{i}]"
        for name in ("g_odd", "g_even"):
            if getattr(s, name).n != n:
                out.append((f"{p}.{name}", "modulus", f"modulus {getattr(s, name).n} != {n}"))
        if s.F is not None and s.F.n != n:
            out.append((f"{p}.F", "modulus", f"modulus {s.F.n} != {n}"))
        if len(s.powers) != 3:
            out.append((f"{p}.powers", "powers", "exactly three powers required"))
            continue
        for j, a in enumerate(s.powers):
            if a < 1:
                out.append((f"{p}.powers[{j}]", "powers", f"power {a} < 1"))
        if mode is Mode.MARKOVSKI:
            if s.g_odd != steps[0].g_odd or s.g_even != steps[0].g_odd:
                out.append((p, "markovski_shape", "markovski mode uses a single quasigroup"))
            if s.kind_odd is not Kind.L or s.kind_even is not Kind.L:
                out.append((p, "markovski_shape", "markovski mode uses left translations"))
            if s.powers[:2] != (1, 1):
                out.append((f"{p}.powers", "markovski_shape", "markovski mode uses first powers"))
        else:
            if s.F is None:
                out.append((f"{p}.F", "orthogonal_system", "generalized mode needs F"))
            if len(set(s.powers)) != 3:
                out.append((f"{p}.powers", "distinct_powers", f"repeated power in {list(s.powers)}"))
    if strict and mode is Mode.GENERALIZED:
        seen = [a for s in steps for a in s.powers]
        if len(set(seen)) != len(seen):
            out.append(("steps", "distinct_powers", "powers repeat across steps"))
    return out


@dataclass(frozen=True)
class KeySchedule:
    n: int
    leaders: tuple[int, int]
    steps: tuple[StepKey, ...]
    mode: Mode = Mode.GENERALIZED
    _compiled: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "steps", tuple(self.steps))
        object.__setattr__(self, "leaders", tuple(int(v) for v in self.leaders))
        problems = self.problems()
        if problems:
            raise InvalidKey(problems)

    def problems(self, strict: bool = False) -> list[tuple[str, str, str]]:
        return schedule_problems(self.n, self.leaders, self.steps, self.mode, strict)

    @classmethod
    def markovski(cls, q: TQuasigroup, leader: int) -> KeySchedule:
        step = StepKey(q, Kind.L, q, Kind.L, (1, 1, 1), None)
        return cls(q.n, (leader, leader), (step,), Mode.MARKOVSKI)

    def compiled(self, decrypt: bool) -> list[tuple[int, ...]]:
        rows = self._compiled.get(decrypt)
        if rows is None:
            rows = [_compile(s, self.n, decrypt, self.mode is Mode.MARKOVSKI) for s in self.steps]
            self._compiled[decrypt] = rows
        return rows


@dataclass
class StepTrace:
    """Intermediate values for one pair.

    For encryption the translation chains come first and ``f_chain`` holds
    the successive ``F`` images; for decryption ``f_chain`` comes first.
    """

    pair: int
    step: int
    leaders: Pair
    inputs: Pair
    odd_chain: list[int]
    even_chain: list[int]
    f_chain: list[Pair]
    outputs: Pair


def _symbols(stream: Iterable, n: int) -> list[int]:
    out = []
    for s in stream:
        if isinstance(s, Residue):
            if s.n != n:
                raise ModulusMismatch(f"symbol {s!r} is not mod {n}")
            s = s.value
        s = int(s)
        if not 0 <= s < n:
            raise ModulusMismatch(f"symbol {s} outside [0, {n})")
        out.append(s)
    return out


def _compile(s: StepKey, n: int, decrypt: bool, markovski: bool) -> tuple[int, ...]:
    """Collapse one step into ``o_k = a*x1 + b*x2 + c*l1 + d*l2 + e`` rows, k = 1, 2."""
    sign = -1 if decrypt else 1
    A1, B1, C1 = s.g_odd.translation_affine(s.kind_odd, sign * s.powers[0])
    A2, B2, C2 = s.g_even.translation_affine(s.kind_even, sign * s.powers[1])
    if markovski:
        if decrypt:
            # u1 = T^-1_l(w1), u2 = T^-1_{w1}(w2)
            return (A1, 0, B1, 0, C1, B2, A2, 0, 0, C2)
        # v1 = T_l(u1), v2 = T_{v1}(u2)
        return (A1, 0, B1, 0, C1, B2 * A1 % n, A2, B2 * B1 % n, 0, (B2 * C1 + C2) % n)
    (p, q, r), (t, w, z) = s.F.affine(sign * s.powers[2])
    if decrypt:
        return (
            A1 * p % n, A1 * q % n, B1, 0, (A1 * r + C1) % n,
            A2 * t % n, A2 * w % n, 0, B2, (A2 * z + C2) % n,
        )
    return (
        p * A1 % n, q * A2 % n, p * B1 % n, q * B2 % n, (p * C1 + q * C2 + r) % n,
        t * A1 % n, w * A2 % n, t * B1 % n, w * B2 % n, (t * C1 + w * C2 + z) % n,
    )


def _run_fast(key: KeySchedule, syms: list[int], decrypt: bool) -> list[int]:
    n = key.n
    rows = key.compiled(decrypt)
    k = len(rows)
    l1, l2 = key.leaders
    markovski = key.mode is Mode.MARKOVSKI
    out = [0] * len(syms)
    for j in range(0, len(syms), 2):
        a, b, c, d, e, f, g, h, i, m = rows[(j >> 1) % k]
        x1 = syms[j]
        x2 = syms[j + 1]
        o1 = (a * x1 + b * x2 + c * l1 + d * l2 + e) % n
        o2 = (f * x1 + g * x2 + h * l1 + i * l2 + m) % n
        out[j] = o1
        out[j + 1] = o2
        if decrypt:
            l1, l2 = x1, x2
        else:
            l1, l2 = o1, o2
        if markovski:
            l1 = l2
    return out


def _chain(q: TQuasigroup, kind: Kind, leader: int, power: int, x: int) -> list[int]:
    step = 1 if power >= 0 else -1
    chain = []
    for _ in range(abs(power)):
        x = q.translate_pow(kind, leader, step, x)
        chain.append(x)
    return chain


def _f_chain(F: OrthoPair, power: int, p: Pair) -> list[Pair]:
    step = 1 if power >= 0 else -1
    chain = []
    for _ in range(abs(power)):
        p = F.iterate(step, *p)
        chain.append(p)
    return chain


def _run_reference(key: KeySchedule, syms: list[int], decrypt: bool, trace: list | None) -> list[int]:
    l1, l2 = key.leaders
    markovski = key.mode is Mode.MARKOVSKI
    sign = -1 if decrypt else 1
    out = []
    for j in range(0, len(syms), 2):
        idx = (j >> 1) % len(key.steps)
        s = key.steps[idx]
        a1, a2, a3 = s.powers
        x = (syms[j], syms[j + 1])
        f_chain: list[Pair] = []
        if decrypt and not markovski:
            f_chain = _f_chain(s.F, -a3, x)
        v = f_chain[-1] if f_chain else x
        odd = _chain(s.g_odd, s.kind_odd, l1, sign * a1, v[0])
        o1 = odd[-1] if odd else v[0]
        if markovski:
            l2 = x[0] if decrypt else o1
        even = _chain(s.g_even, s.kind_even, l2, sign * a2, v[1])
        o2 = even[-1] if even else v[1]
        if not decrypt and not markovski:
            f_chain = _f_chain(s.F, a3, (o1, o2))
            if f_chain:
                o1, o2 = f_chain[-1]
        if trace is not None:
            trace.append(StepTrace(j >> 1, idx, (l1, l2), x, odd, even, f_chain, (o1, o2)))
        out += [o1, o2]
        l1, l2 = x if decrypt else (o1, o2)
        if markovski:
            l1 = l2
    return out


def _prepare(key: KeySchedule, stream) -> list[int]:
    syms = _symbols(stream, key.n)
    if len(syms) % 2:
        raise OddLength(f"stream length {len(syms)} is odd; pad it to even length first")
    return syms


def encrypt(key: KeySchedule, plain: Sequence, trace: list | None = None,
            reference: bool = False) -> list[int]:
    """Encrypt an even-length symbol stream.

    Passing a list as ``trace`` (or ``reference=True``) runs the step-by-step
    translation path and appends one :class:`StepTrace` per pair; otherwise
    each step is applied as a precomputed affine map.  Both paths agree.
    """
    syms = _prepare(key, plain)
    if trace is not None or reference:
        return _run_reference(key, syms, False, trace)
    return _run_fast(key, syms, False)


def decrypt(key: KeySchedule, cipher: Sequence, trace: list | None = None,
            reference: bool = False) -> list[int]:
    syms = _prepare(key, cipher)
    if trace is not None or reference:
        return _run_reference(key, syms, True, trace)
    return _run_fast(key, syms, True)


def _markovski_q(key: KeySchedule) -> TQuasigroup:
    if key.mode is not Mode.MARKOVSKI:
        raise WrongMode(f"key is in {key.mode.value} mode, not markovski")
    return key.steps[0].g_odd


def encrypt_markovski(key: KeySchedule, plain: Sequence) -> list[int]:
    """Classical chaining ``v_i = l_i * u_i`` with ``l_1`` the leader and ``l_i = v_{i-1}``.

    Any length is accepted, odd included.
    """
    q = _markovski_q(key)
    leader = key.leaders[0]
    out = []
    for u in _symbols(plain, key.n):
        leader = q(leader, u)
        out.append(leader)
    return out


def decrypt_markovski(key: KeySchedule, cipher: Sequence) -> list[int]:
    q = _markovski_q(key)
    leader = key.leaders[0]
    out = []
    for v in _symbols(cipher, key.n):
        out.append(q.left_divide(leader, v))
        leader = v
    return out
