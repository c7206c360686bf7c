"""Exact arithmetic in Z_n and its unit group.

The rest of the package works on plain ``int`` residues in ``[0, n)`` for
speed; :class:`Residue` is the checked value type for callers who want
modulus-tagged arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class ModulusMismatch(ValueError):
    """Operands live in different rings, or a symbol is outside ``[0, n)``."""


class NotAUnit(ArithmeticError):
    """An element that must be invertible mod n is not."""


class CompositeModulus(ValueError):
    """A prime modulus was required."""


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``."""
    prev_x, x = 1, 0
    prev_y, y = 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        prev_x, x = x, prev_x - q * x
        prev_y, y = y, prev_y - q * y
    return a, prev_x, prev_y


def inv_mod(a: int, n: int) -> int:
    g, x, _ = egcd(a % n, n)
    if g != 1:
        raise NotAUnit(f"{a % n} is not invertible mod {n} (gcd {g})")
    return x % n


def is_unit_mod(a: int, n: int) -> bool:
    return egcd(a % n, n)[0] == 1


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Modulus:
    n: int
    is_prime: bool = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {self.n!r}")
        object.__setattr__(self, "is_prime", is_prime(self.n))

    def __call__(self, value: int) -> Residue:
        return Residue(value % self.n, self)

    def elements(self) -> list[Residue]:
        return [Residue(v, self) for v in range(self.n)]

    def require_prime(self) -> None:
        if not self.is_prime:
            raise CompositeModulus(f"modulus {self.n} is not prime")


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: Modulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.n:
            raise ValueError(f"{self.value} is not a canonical residue mod {self.modulus.n}")

    @property
    def n(self) -> int:
        return self.modulus.n

    def _check(self, other: Residue) -> None:
        if not isinstance(other, Residue):
            raise TypeError(f"expected Residue, got {type(other).__name__}")
        if other.modulus.n != self.modulus.n:
            raise ModulusMismatch(f"mod {self.n} vs mod {other.n}")

    def __add__(self, other: Residue) -> Residue:
        self._check(other)
        return Residue((self.value + other.value) % self.n, self.modulus)

    def __sub__(self, other: Residue) -> Residue:
        self._check(other)
        return Residue((self.value - other.value) % self.n, self.modulus)

    def __mul__(self, other: Residue) -> Residue:
        self._check(other)
        return Residue(self.value * other.value % self.n, self.modulus)

    def __neg__(self) -> Residue:
        return Residue(-self.value % self.n, self.modulus)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"Residue({self.value} mod {self.n})"

    def inverse(self) -> Residue:
        return Residue(inv_mod(self.value, self.n), self.modulus)

    def is_unit(self) -> bool:
        return is_unit_mod(self.value, self.n)


def add(a: Residue, b: Residue) -> Residue:
    return a + b


def mul(a: Residue, b: Residue) -> Residue:
    return a * b


def neg(a: Residue) -> Residue:
    return -a


def inv(a: Residue) -> Residue:
    """Multiplicative inverse by extended Euclid; raises :class:`NotAUnit`."""
    return a.inverse()


def is_unit(a: Residue) -> bool:
    return a.is_unit()


def as_int(x: int | Residue, n: int) -> int:
    """Canonical int for ``x`` in Z_n; rejects residues of another modulus."""
    if isinstance(x, Residue):
        if x.n != n:
            raise ModulusMismatch(f"residue mod {x.n} used where mod {n} expected")
        return x.value
    return int(x) % n
