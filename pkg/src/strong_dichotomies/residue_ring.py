"""Exact arithmetic over Z_n for even n, and the gcd invariants of unit involutions."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import ModulusError


@dataclass(frozen=True)
class Modulus:
    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise ModulusError(f"modulus must be an int, got {self.n!r}")
        if self.n < 2 or self.n % 2:
            raise ModulusError(f"modulus must be even and >= 2, got {self.n}")

    @property
    def k(self) -> int:
        return self.n // 2

    def __int__(self):
        return self.n


def as_modulus(n: int | Modulus) -> Modulus:
    return n if isinstance(n, Modulus) else Modulus(n)


@dataclass(frozen=True)
class Residue:
    """A class of Z_n, stored by its least non-negative representative."""

    value: int
    modulus: Modulus

    def __post_init__(self):
        object.__setattr__(self, "modulus", as_modulus(self.modulus))
        object.__setattr__(self, "value", self.value % self.modulus.n)

    def __int__(self):
        return self.value


@dataclass(frozen=True)
class UnitResidue(Residue):
    def __post_init__(self):
        super().__post_init__()
        if gcd(self.value, self.modulus.n) != 1:
            raise ModulusError(f"{self.value} is not a unit mod {self.modulus.n}")


def euler_phi(n: int | Modulus) -> int:
    n = as_modulus(n).n
    return sum(1 for m in range(1, n + 1) if gcd(m, n) == 1)


def units_and_involutions(n: int | Modulus) -> tuple[list[int], list[int]]:
    """Return (units, involutive units) of Z_n, each ascending."""
    n = as_modulus(n).n
    units = [v for v in range(1, n) if gcd(v, n) == 1]
    return units, [v for v in units if v * v % n == 1]


def sigma_tau_u0(v: int | UnitResidue, n: int | Modulus | None = None) -> tuple[int, int, int]:
    """Return (gcd(v-1, n), gcd(v+1, n), n // gcd(v+1, n)) for a unit v.

    v is reduced to its least non-negative representative first, so
    v = 1 gives sigma = gcd(0, n) = n.
    """
    if isinstance(v, UnitResidue):
        if n is not None and as_modulus(n) != v.modulus:
            raise ModulusError("unit and modulus disagree")
        unit = v
    else:
        unit = UnitResidue(v, as_modulus(n))
    nu, m = unit.value, unit.modulus.n
    sigma = gcd(nu - 1, m)
    tau = gcd(nu + 1, m)
    return sigma, tau, m // tau
