"""Linear (T-)quasigroups ``x*y = phi*x + psi*y + c`` over Z_n.

Automorphisms of the cyclic group Z_n are multiplications by units, so a
T-quasigroup is fully described by the integer triple ``(phi, psi, c)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .modring import Modulus, NotAUnit, Residue, as_int, inv_mod, is_unit_mod


class Parastrophe(str, enum.Enum):
    """Which argument/result roles are permuted.

    With ``A(x1, x2) = x3``:  ``s12``: (x2, x1) -> x3,  ``s13``: (x3, x2) -> x1,
    ``s23``: (x1, x3) -> x2,  ``s123``: (x2, x3) -> x1,  ``s132``: (x3, x1) -> x2.
    """

    E = "e"
    S12 = "12"
    S13 = "13"
    S23 = "23"
    S123 = "123"
    S132 = "132"


NONTRIVIAL = (Parastrophe.S12, Parastrophe.S13, Parastrophe.S23, Parastrophe.S123, Parastrophe.S132)


class Kind(str, enum.Enum):
    L = "L"  # x -> a*x
    R = "R"  # x -> x*a
    P = "P"  # x -> y with x*y = a


# one step of the inverse translation: (kind to apply, parastrophe to apply it to)
_INVERSE_VIA = {
    Kind.R: (Kind.R, Parastrophe.S13),
    Kind.L: (Kind.L, Parastrophe.S23),
    Kind.P: (Kind.L, Parastrophe.S13),
}


class Corollary1Report(NamedTuple):
    k: bool
    m: bool
    k_plus_m: bool
    k_minus_m: bool
    k_plus_1: bool
    m_plus_1: bool
    k2_plus_m: bool
    k_plus_m2: bool

    @property
    def passed(self) -> bool:
        return all(self)


@dataclass(frozen=True)
class TQuasigroup:
    phi: int
    psi: int
    c: int
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"modulus must be >= 2, got {self.n}")
        for name in ("phi", "psi", "c"):
            object.__setattr__(self, name, int(getattr(self, name)) % self.n)
        for name in ("phi", "psi"):
            if not is_unit_mod(getattr(self, name), self.n):
                raise NotAUnit(f"{name}={getattr(self, name)} is not a unit mod {self.n}")

    @classmethod
    def from_residues(cls, phi: Residue, psi: Residue, c: Residue) -> TQuasigroup:
        n = phi.n
        return cls(phi.value, as_int(psi, n), as_int(c, n), n)

    @property
    def modulus(self) -> Modulus:
        return Modulus(self.n)

    @property
    def params(self) -> tuple[int, int, int]:
        return self.phi, self.psi, self.c

    def __call__(self, x, y) -> int:
        return (self.phi * as_int(x, self.n) + self.psi * as_int(y, self.n) + self.c) % self.n

    eval = __call__

    def parastrophe(self, s: Parastrophe | str) -> TQuasigroup:
        s = Parastrophe(s)
        n, phi, psi, c = self.n, self.phi, self.psi, self.c
        if s is Parastrophe.E:
            return self
        if s is Parastrophe.S12:
            return TQuasigroup(psi, phi, c, n)
        if s in (Parastrophe.S13, Parastrophe.S123):
            pi = inv_mod(phi, n)
            a, b, k = pi, -pi * psi, -pi * c
            return TQuasigroup(a, b, k, n) if s is Parastrophe.S13 else TQuasigroup(b, a, k, n)
        qi = inv_mod(psi, n)
        a, b, k = -qi * phi, qi, -qi * c
        return TQuasigroup(a, b, k, n) if s is Parastrophe.S23 else TQuasigroup(b, a, k, n)

    def left_divide(self, x, b) -> int:
        """The unique ``y`` with ``x*y == b``."""
        return self.parastrophe(Parastrophe.S23)(x, b)

    def right_divide(self, b, y) -> int:
        """The unique ``x`` with ``x*y == b``."""
        return self.parastrophe(Parastrophe.S13)(b, y)

    def translate(self, kind: Kind | str, leader, x) -> int:
        kind = Kind(kind)
        if kind is Kind.L:
            return self(leader, x)
        if kind is Kind.R:
            return self(x, leader)
        return self.left_divide(x, leader)

    def translation_affine(self, kind: Kind | str, power: int) -> tuple[int, int, int]:
        """Coefficients ``(a, b, k)`` with ``T_l^power(x) == a*x + b*l + k (mod n)``.

        A single translation is affine in both ``x`` and the leader, so its
        ``power``-fold composition is too; negative powers compose the inverse
        translation.
        """
        kind = Kind(kind)
        q = self
        if power < 0:
            kind, s = _INVERSE_VIA[kind]
            q = self.parastrophe(s)
            power = -power
        n = self.n
        if kind is Kind.R:
            alpha, beta = q.phi, q.psi
        elif kind is Kind.L:
            alpha, beta = q.psi, q.phi
        else:
            q = q.parastrophe(Parastrophe.S23)
            alpha, beta = q.phi, q.psi
        # a = alpha^p, geometric sum s = 1 + alpha + ... + alpha^(p-1)
        a, s = 1, 0
        for _ in range(power):
            s = (s * alpha + 1) % n
            a = a * alpha % n
        return a, s * beta % n, s * q.c % n

    def translate_pow(self, kind: Kind | str, leader, power: int, x) -> int:
        kind = Kind(kind)
        n = self.n
        leader, x = as_int(leader, n), as_int(x, n)
        q = self
        if power < 0:
            kind, s = _INVERSE_VIA[kind]
            q = self.parastrophe(s)
        for _ in range(abs(power)):
            x = q.translate(kind, leader, x)
        return x

    def ortho_to_parastrophe(self, s: Parastrophe | str) -> bool:
        """Closed-form test that this quasigroup is orthogonal to its ``s``-parastrophe."""
        s = Parastrophe(s)
        n, phi, psi = self.n, self.phi, self.psi
        if s is Parastrophe.E:
            raise ValueError("a quasigroup is never orthogonal to itself")
        if s is Parastrophe.S12:
            return is_unit_mod(phi - psi, n) and is_unit_mod(phi + psi, n)
        if s is Parastrophe.S13:
            return is_unit_mod(1 + phi, n)
        if s is Parastrophe.S23:
            return is_unit_mod(1 + psi, n)
        if s is Parastrophe.S123:
            return is_unit_mod(phi + psi * psi, n)
        return is_unit_mod(phi * phi + psi, n)

    def corollary1_check(self) -> Corollary1Report:
        self.modulus.require_prime()
        k, m, n = self.phi, self.psi, self.n
        vals = (k, m, k + m, k - m, k + 1, m + 1, k * k + m, k + m * m)
        return Corollary1Report(*(v % n != 0 for v in vals))

    def cayley_table(self) -> np.ndarray:
        x = np.arange(self.n, dtype=np.int64)
        return (self.phi * x[:, None] + self.psi * x[None, :] + self.c) % self.n


def parastrophe(q: TQuasigroup, s: Parastrophe | str) -> TQuasigroup:
    return q.parastrophe(s)


def translate(q: TQuasigroup, kind, leader, x) -> int:
    return q.translate(kind, leader, x)


def translate_pow(q: TQuasigroup, kind, leader, power: int, x) -> int:
    return q.translate_pow(kind, leader, power, x)


def left_divide(q: TQuasigroup, x, b) -> int:
    return q.left_divide(x, b)


def right_divide(q: TQuasigroup, b, y) -> int:
    return q.right_divide(b, y)


def ortho_to_parastrophe(q: TQuasigroup, s) -> bool:
    return q.ortho_to_parastrophe(s)


def corollary1_check(q: TQuasigroup) -> Corollary1Report:
    return q.corollary1_check()
