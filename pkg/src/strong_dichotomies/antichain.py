"""Orbit traversals of dichotomies, strong classes, and the antichain bounds."""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import numpy as np

from .affine_group import AffineMap, quasipolarity_conjugacy
from .dichotomy import Dichotomy, StrengthReport, all_dichotomies, complement, image_masks, members_of_Mq, strength
from .errors import BudgetExceeded
from .perm_group import PermGroup, quasipolarity_classes
from .residue_ring import as_modulus

BRUTEFORCE_MAX_N = 16
TRAVERSAL_MAX_N = 24
VIA_MQ_MAX_N = 24


def budget(default: int, override: int | None = None) -> int:
    """Largest n an enumeration may run at.

    An explicit ``override`` wins; otherwise ANTICHAIN_BUDGET, when set,
    replaces every default cap.
    """
    if override is not None:
        return override
    env = os.environ.get("ANTICHAIN_BUDGET")
    return int(env) if env else default


@dataclass(frozen=True)
class CanonicalClass:
    representative: Dichotomy
    orbit_size: int
    strength: StrengthReport

    @property
    def polarity(self):
        return self.strength.polarity


def canonicalize(D: Dichotomy, G: PermGroup) -> Dichotomy:
    """The member of D's orbit with the numerically smallest mask."""
    return Dichotomy(int(image_masks(G, D).min()), D.n)


def _check_degree(G, n):
    n = as_modulus(n).n
    if G.degree != n:
        raise ValueError(f"group of degree {G.degree} used with n = {n}")
    return n


def orbit_traversal(G: PermGroup, n, max_n: int | None = None) -> list[CanonicalClass]:
    """One class per G-orbit on the n/2-subsets, sorted by representative mask."""
    n = _check_degree(G, n)
    if n > budget(TRAVERSAL_MAX_N, max_n):
        raise BudgetExceeded(f"orbit traversal at n = {n} exceeds budget")
    seen = set()
    out = []
    for D in all_dichotomies(n):
        if D.mask in seen:
            continue
        orbit = {int(m) for m in image_masks(G, D)}
        seen |= orbit
        rep = Dichotomy(min(orbit), n)
        out.append(CanonicalClass(rep, len(orbit), strength(rep, G)))
    out.sort(key=lambda c: c.representative.mask)
    return out


def strong_classes(G: PermGroup, n, strategy="bruteforce", max_n: int | None = None) -> list[CanonicalClass]:
    """Orbits of strong dichotomies, one canonical representative each.

    ``bruteforce`` filters the full traversal. ``via_Mq`` only looks inside
    M_q for one quasipolarity q per conjugacy class; every strong set is
    conjugate into one of these, so both give the same classes.
    """
    n = _check_degree(G, n)
    if strategy == "bruteforce":
        if n > budget(BRUTEFORCE_MAX_N, max_n):
            raise BudgetExceeded(f"brute-force strong classes at n = {n} exceed budget")
        return [c for c in orbit_traversal(G, n, max_n=max_n) if c.strength.strong]
    if strategy != "via_Mq":
        raise ValueError(f"unknown strategy {strategy!r}")
    if G.kind != "affine":
        raise ValueError("via_Mq needs the affine group")
    if n > budget(VIA_MQ_MAX_N, max_n):
        raise BudgetExceeded(f"via_Mq strong classes at n = {n} exceed budget")

    order = len(G)
    seen = set()
    out = []
    for cls in quasipolarity_conjugacy(n):
        for D in members_of_Mq(cls.representative):
            masks = image_masks(G, D)
            canon = int(masks.min())
            if canon in seen:
                continue
            seen.add(canon)
            if np.count_nonzero(masks == np.uint64(D.mask)) != 1:
                continue
            rep = Dichotomy(canon, n)
            out.append(CanonicalClass(rep, order, strength(rep, G)))
    out.sort(key=lambda c: c.representative.mask)
    return out


def is_antichain(family) -> bool:
    family = list(family)
    return not any(a != b and a.issubset(b) for a in family for b in family)


def is_complement_free(family) -> bool:
    masks = {D.mask for D in family}
    return not any(complement(D).mask in masks for D in family)


@dataclass(frozen=True)
class BoundReport:
    n: int
    group: str
    exact_strong_count: int
    sperner: int
    purdy: int
    ekr: int
    cota: Fraction
    closed_form: Fraction | None

    @property
    def cota_floor(self) -> int:
        return self.cota.numerator // self.cota.denominator


def closed_form_bound(kind: str, n) -> Fraction | None:
    k = as_modulus(n).k
    if kind == "affine":
        return Fraction(2) ** (k - 1)
    if kind == "dihedral":
        return Fraction(2) ** (k - 1) + Fraction(2) ** (k - 2) / k
    if kind == "symmetric":
        return Fraction(1, factorial(k))
    return None


def cota_bound(G: PermGroup) -> Fraction:
    """Sum of 2^(n/2) / |C_G(q)| over conjugacy classes of quasipolarities q."""
    half = 2 ** (G.degree // 2)
    return sum((Fraction(half, c) for _, _, c in quasipolarity_classes(G)), Fraction(0))


def count_strong(G: PermGroup, n, max_n: int | None = None) -> int:
    if n <= budget(BRUTEFORCE_MAX_N, max_n):
        return len(strong_classes(G, n, "bruteforce", max_n=max_n))
    if G.kind == "affine":
        return len(strong_classes(G, n, "via_Mq", max_n=max_n))
    raise BudgetExceeded(f"no strong-class enumeration for {G.kind} at n = {n}")


def bounds(G: PermGroup, n, max_n: int | None = None) -> BoundReport:
    n = _check_degree(G, n)
    k = n // 2
    return BoundReport(
        n=n,
        group=G.kind or "custom",
        exact_strong_count=count_strong(G, n, max_n=max_n),
        sperner=comb(n, k),
        purdy=comb(n, k - 1),
        ekr=comb(n - 1, k - 1),
        cota=cota_bound(G),
        closed_form=closed_form_bound(G.kind, n),
    )


# golden files

def format_golden(classes, report: BoundReport) -> str:
    lines = [f"{report.n},{report.group},{len(classes)},{report.cota.numerator},{report.cota.denominator}"]
    for c in classes:
        p = c.polarity
        if not isinstance(p, AffineMap):
            raise ValueError("golden files need polarities labelled as affine maps")
        lines.append(f"{c.representative.hex},{c.orbit_size},{p.u},{p.v}")
    return "\n".join(lines) + "\n"


def parse_golden(text: str):
    """Return (header dict, list of row tuples) from golden-file text."""
    rows = [line.split(",") for line in text.splitlines() if line.strip()]
    n, group, count, num, den = rows[0]
    header = {"n": int(n), "group": group, "count": int(count), "cota": Fraction(int(num), int(den))}
    body = [(int(m, 16), int(o), int(u), int(v)) for m, o, u, v in rows[1:]]
    if len(body) != header["count"]:
        raise ValueError("golden file row count disagrees with its header")
    return header, body
