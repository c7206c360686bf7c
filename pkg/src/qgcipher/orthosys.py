"""Pairs of orthogonal linear operations acting as a bijection of Z_n x Z_n."""

from __future__ import annotations

from dataclasses import dataclass, field

from .modring import ModulusMismatch, as_int, inv_mod, is_unit_mod
from .quasigroup import Parastrophe, TQuasigroup

Pair = tuple[int, int]


class NotOrthogonal(ValueError):
    pass


@dataclass(frozen=True)
class OrthoPair:
    """``F(x, y) = (first(x, y), second(x, y))``.

    Orthogonality of two linear operations is exactly invertibility of the
    2x2 coefficient matrix, i.e. ``phi1*psi2 - psi1*phi2`` being a unit.
    """

    first: TQuasigroup
    second: TQuasigroup
    det_inv: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.first.n != self.second.n:
            raise ModulusMismatch(f"mod {self.first.n} vs mod {self.second.n}")
        n = self.n
        det = (self.first.phi * self.second.psi - self.first.psi * self.second.phi) % n
        if not is_unit_mod(det, n):
            raise NotOrthogonal(f"determinant {det} is not a unit mod {n}")
        object.__setattr__(self, "det_inv", inv_mod(det, n))

    @classmethod
    def parastrophic(cls, q: TQuasigroup, s: Parastrophe | str) -> OrthoPair:
        """``(q, q^s)``; rejected unless the closed-form orthogonality test passes."""
        if not q.ortho_to_parastrophe(s):
            raise NotOrthogonal(f"{q} is not orthogonal to its ({Parastrophe(s).value})-parastrophe")
        return cls(q, q.parastrophe(s))

    @property
    def n(self) -> int:
        return self.first.n

    def forward(self, x, y) -> Pair:
        n = self.n
        x, y = as_int(x, n), as_int(y, n)
        return self.first(x, y), self.second(x, y)

    def inverse(self, a, b) -> Pair:
        n, f, g, di = self.n, self.first, self.second, self.det_inv
        a = (as_int(a, n) - f.c) * di
        b = (as_int(b, n) - g.c) * di
        return (g.psi * a - f.psi * b) % n, (f.phi * b - g.phi * a) % n

    def iterate(self, power: int, x, y) -> Pair:
        step = self.forward if power >= 0 else self.inverse
        p = (as_int(x, self.n), as_int(y, self.n))
        for _ in range(abs(power)):
            p = step(*p)
        return p

    def inverse_coefficients(self) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
        """``((p, q, r), (s, t, u))`` with ``F^-1(a, b) = (p*a + q*b + r, s*a + t*b + u)``."""
        n, f, g, di = self.n, self.first, self.second, self.det_inv
        p, q = g.psi * di % n, -f.psi * di % n
        s, t = -g.phi * di % n, f.phi * di % n
        return (p, q, -(p * f.c + q * g.c) % n), (s, t, -(s * f.c + t * g.c) % n)

    def affine(self, power: int) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
        """Coefficient rows of ``F^power`` in the same layout as :meth:`inverse_coefficients`."""
        n = self.n
        if power >= 0:
            f, g = self.first, self.second
            base = ((f.phi, f.psi, f.c), (g.phi, g.psi, g.c))
        else:
            base = self.inverse_coefficients()
        acc = ((1, 0, 0), (0, 1, 0))
        for _ in range(abs(power)):
            acc = _compose(base, acc, n)
        return acc


def _compose(outer, inner, n):
    """Coefficients of ``outer(inner(x, y))``."""
    (a, b, c), (d, e, f) = outer
    (p, q, r), (s, t, u) = inner
    return (
        ((a * p + b * s) % n, (a * q + b * t) % n, (a * r + b * u + c) % n),
        ((d * p + e * s) % n, (d * q + e * t) % n, (d * r + e * u + f) % n),
    )


def make_orthopair(first: TQuasigroup, second: TQuasigroup) -> OrthoPair:
    return OrthoPair(first, second)


def forward(F: OrthoPair, p: Pair) -> Pair:
    return F.forward(*p)


def inverse(F: OrthoPair, p: Pair) -> Pair:
    return F.inverse(*p)


def iterate(F: OrthoPair, power: int, p: Pair) -> Pair:
    return F.iterate(power, *p)
