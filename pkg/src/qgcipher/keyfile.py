"""JSON key files: parsing with field-precise validation, and seeded key generation.

A key file looks like::

    {"version": 1, "modulus": 313, "mode": "generalized", "leaders": [110, 210],
     "steps": [{"g_odd": {"phi": 25, "psi": 37, "c": 11, "kind": "R"},
                "g_even": {"phi": 75, "psi": 39, "c": 100, "kind": "L"},
                "powers": [3, 1, 2],
                "F": {"first": {"phi": 7, "psi": 12, "c": 13},
                      "second": {"phi": 182, "psi": 287, "c": 25}}}, ...]}

``F`` is ``null`` in markovski mode.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Any

from .cipher import KeySchedule, Mode, StepKey, schedule_problems
from .modring import CompositeModulus, NotAUnit, is_prime
from .orthosys import NotOrthogonal, OrthoPair
from .quasigroup import NONTRIVIAL, Kind, TQuasigroup

VERSION = 1
DEFAULT_MODULUS = 313
MAX_POWER = 16


class InfeasibleConstraints(ValueError):
    pass


@dataclass(frozen=True)
class Check:
    path: str
    name: str
    ok: bool
    detail: str = ""


@dataclass
class ValidationReport:
    checks: list[Check] = field(default_factory=list)
    schedule: KeySchedule | None = None

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def add(self, path, name, ok, detail=""):
        self.checks.append(Check(path, name, bool(ok), detail))

    def lines(self) -> list[str]:
        return [f"{'PASS' if c.ok else 'FAIL'} {c.name} {c.path}" + (f": {c.detail}" if c.detail else "")
                for c in self.checks]


def _qg_dict(q: TQuasigroup, kind: Kind | None = None) -> dict:
    d = {"phi": q.phi, "psi": q.psi, "c": q.c}
    if kind is not None:
        d["kind"] = Kind(kind).value
    return d


def to_dict(key: KeySchedule) -> dict:
    steps = []
    for s in key.steps:
        steps.append({
            "g_odd": _qg_dict(s.g_odd, s.kind_odd),
            "g_even": _qg_dict(s.g_even, s.kind_even),
            "powers": list(s.powers),
            "F": None if s.F is None else {"first": _qg_dict(s.F.first), "second": _qg_dict(s.F.second)},
        })
    return {
        "version": VERSION,
        "modulus": key.n,
        "mode": key.mode.value,
        "leaders": list(key.leaders),
        "steps": steps,
    }


def dumps(key: KeySchedule) -> str:
    return json.dumps(to_dict(key), indent=2) + "\n"


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def _parse_qg(d: Any, n: int, path: str, rep: ValidationReport, with_kind: bool):
    if not isinstance(d, dict):
        rep.add(path, "schema", False, "expected an object")
        return None, None
    ok = True
    for k in ("phi", "psi", "c"):
        if not _is_int(d.get(k)):
            rep.add(f"{path}.{k}", "schema", False, "expected an integer")
            ok = False
        elif not 0 <= d[k] < n:
            rep.add(f"{path}.{k}", "range", False, f"{d[k]} outside [0, {n})")
            ok = False
    kind = None
    if with_kind:
        try:
            kind = Kind(d.get("kind"))
        except ValueError:
            rep.add(f"{path}.kind", "schema", False, f"kind must be L, R or P, got {d.get('kind')!r}")
            ok = False
    if not ok:
        return None, kind
    for k in ("phi", "psi"):
        try:
            TQuasigroup(d[k], 1, 0, n)
        except NotAUnit:
            rep.add(f"{path}.{k}", "units", False, f"{d[k]} is not a unit mod {n}")
            ok = False
    if ok:
        rep.add(path, "units", True)
        return TQuasigroup(d["phi"], d["psi"], d["c"], n), kind
    return None, kind


def validate(doc: Any, strict: bool = False) -> ValidationReport:
    """Check a parsed key document; on success ``report.schedule`` holds the key."""
    rep = ValidationReport()
    if not isinstance(doc, dict):
        rep.add("$", "schema", False, "key file must be a JSON object")
        return rep
    if doc.get("version") != VERSION:
        rep.add("version", "schema", False, f"unsupported version {doc.get('version')!r}")
    n = doc.get("modulus")
    if not _is_int(n) or n < 2:
        rep.add("modulus", "schema", False, f"modulus must be an integer >= 2, got {n!r}")
        return rep
    rep.add("modulus", "schema", True)
    try:
        mode = Mode(doc.get("mode", Mode.GENERALIZED.value))
    except ValueError:
        rep.add("mode", "schema", False, f"unknown mode {doc.get('mode')!r}")
        return rep
    leaders = doc.get("leaders")
    if not (isinstance(leaders, list) and len(leaders) == 2 and all(_is_int(v) for v in leaders)):
        rep.add("leaders", "schema", False, "expected two integers")
        leaders = None
    steps_doc = doc.get("steps")
    if not isinstance(steps_doc, list) or not steps_doc:
        rep.add("steps", "schema", False, "expected a non-empty list")
        return rep

    steps = []
    for i, sd in enumerate(steps_doc):
        p = f"steps[{i}]"
        if not isinstance(sd, dict):
            rep.add(p, "schema", False, "expected an object")
            continue
        g_odd, k_odd = _parse_qg(sd.get("g_odd"), n, f"{p}.g_odd", rep, True)
        g_even, k_even = _parse_qg(sd.get("g_even"), n, f"{p}.g_even", rep, True)
        powers = sd.get("powers")
        if not (isinstance(powers, list) and len(powers) == 3 and all(_is_int(a) for a in powers)):
            rep.add(f"{p}.powers", "schema", False, "expected three integers")
            powers = None
        F = None
        fd = sd.get("F")
        if fd is not None:
            if not isinstance(fd, dict):
                rep.add(f"{p}.F", "schema", False, "expected an object or null")
            else:
                first, _ = _parse_qg(fd.get("first"), n, f"{p}.F.first", rep, False)
                second, _ = _parse_qg(fd.get("second"), n, f"{p}.F.second", rep, False)
                if first is not None and second is not None:
                    try:
                        F = OrthoPair(first, second)
                        rep.add(f"{p}.F", "determinant", True)
                    except NotOrthogonal as e:
                        rep.add(f"{p}.F", "determinant", False, str(e))
        elif mode is Mode.GENERALIZED:
            rep.add(f"{p}.F", "orthogonal_system", False, "generalized mode needs F")
        if None in (g_odd, g_even, k_odd, k_even, powers):
            continue
        if mode is Mode.GENERALIZED and F is None:
            continue
        steps.append(StepKey(g_odd, k_odd, g_even, k_even, tuple(powers), F))

    if not rep.ok or leaders is None:
        return rep
    # structural checks now that every component parsed
    problems = schedule_problems(n, tuple(leaders), steps, mode, strict=strict)
    for path, name, msg in problems:
        rep.add(path, name, False, msg)
    checked = {name for _, name, _ in problems}
    for name in ("leaders", "powers", "distinct_powers" if mode is Mode.GENERALIZED else "markovski_shape"):
        if name not in checked:
            rep.add("leaders" if name == "leaders" else "steps", name, True)
    if rep.ok:
        rep.schedule = KeySchedule(n, tuple(leaders), tuple(steps), mode)
    return rep


def from_dict(doc: Any, strict: bool = False) -> KeySchedule:
    rep = validate(doc, strict=strict)
    if not rep.ok:
        raise InvalidKeyFile(rep)
    return rep.schedule


def loads(text: str, strict: bool = False) -> KeySchedule:
    return from_dict(json.loads(text), strict=strict)


class InvalidKeyFile(ValueError):
    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__("; ".join(f"{c.path}: {c.name} {c.detail}".strip() for c in report.failures))


def _random_qg(rng: random.Random, p: int) -> TQuasigroup:
    while True:
        q = TQuasigroup(rng.randrange(1, p), rng.randrange(1, p), rng.randrange(p), p)
        if q.corollary1_check().passed:
            return q


def keygen(seed, p: int = DEFAULT_MODULUS, steps: int = 3, mode: Mode | str = Mode.GENERALIZED,
           overrides: dict | None = None) -> dict:
    """Deterministic key document from ``seed``.

    Every quasigroup satisfies the eight prime-modulus non-vanishing
    conditions, so each ``F`` may pair a quasigroup with any of its
    parastrophes.  Powers are distinct across the whole schedule, drawn from
    ``[1, 16]``.  ``overrides`` replaces top-level fields before validation.
    """
    mode = Mode(mode)
    if not is_prime(p):
        raise CompositeModulus(f"modulus {p} is not prime")
    if p < 7:
        raise InfeasibleConstraints(f"no quasigroup mod {p} passes all eight conditions")
    if steps < 1:
        raise InfeasibleConstraints("at least one step required")
    rng = random.Random(seed if isinstance(seed, (int, str, bytes)) else repr(seed))
    if mode is Mode.MARKOVSKI:
        q = _random_qg(rng, p)
        leader = rng.randrange(p)
        g = _qg_dict(q, Kind.L)
        doc = {
            "version": VERSION, "modulus": p, "mode": mode.value, "leaders": [leader, leader],
            "steps": [{"g_odd": g, "g_even": dict(g), "powers": [1, 1, 1], "F": None}],
        }
    else:
        if 3 * steps > MAX_POWER:
            raise InfeasibleConstraints(f"{3 * steps} distinct powers needed, only {MAX_POWER} available")
        powers = rng.sample(range(1, MAX_POWER + 1), 3 * steps)
        step_docs = []
        for i in range(steps):
            g_odd, g_even, f = (_random_qg(rng, p) for _ in range(3))
            s = rng.choice(NONTRIVIAL)
            F = OrthoPair.parastrophic(f, s)
            step_docs.append({
                "g_odd": _qg_dict(g_odd, rng.choice((Kind.L, Kind.R))),
                "g_even": _qg_dict(g_even, rng.choice((Kind.L, Kind.R))),
                "powers": powers[3 * i: 3 * i + 3],
                "F": {"first": _qg_dict(F.first), "second": _qg_dict(F.second)},
            })
        doc = {
            "version": VERSION, "modulus": p, "mode": mode.value,
            "leaders": [rng.randrange(p), rng.randrange(p)], "steps": step_docs,
        }
    if overrides:
        doc.update(overrides)
    rep = validate(doc)
    if not rep.ok:
        raise InvalidKeyFile(rep)
    return doc
