"""Property suite behind ``strong-dichotomies verify``.

Each check runs at a single modulus and returns ``None`` when it holds, or
a witness describing the first counterexample.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from . import affine_group as ag
from .antichain import bounds, is_antichain, is_complement_free, strong_classes
from .dichotomy import act, members_of_Mq, members_of_Mq_bruteforce, strength
from .perm_group import (
    Permutation,
    affine_embedding,
    builtin_group,
    centralizer_size,
    conjugacy_class,
    quasipolarities_of,
)
from .residue_ring import euler_phi, sigma_tau_u0, units_and_involutions


@dataclass(frozen=True)
class CheckResult:
    name: str
    n: int
    passed: bool
    witness: object = None

    def line(self):
        tag = "PASS" if self.passed else "FAIL"
        extra = "" if self.passed else f"  witness: {self.witness}"
        return f"{tag}  {self.name} (n={self.n}){extra}"


def _first(iterable):
    return next(iter(iterable), None)


# residue ring / affine group


def check_u0_divides_sigma(n):
    for v in units_and_involutions(n)[1]:
        sigma, _, u0 = sigma_tau_u0(v, n)
        if sigma % u0:
            return v


def check_odd_k_sigma(n):
    if (n // 2) % 2 == 0:
        return None
    for v in units_and_involutions(n)[1]:
        sigma, _, u0 = sigma_tau_u0(v, n)
        if sigma != 2 * u0:
            return v


def check_characterization(n):
    return _first(
        g for g in ag.enumerate_group(n)
        if ag.is_quasipolarity_characterized(g) != ag.is_quasipolarity_bruteforce(g)
    )


def check_involution_formula(n):
    ident = ag.AffineMap.identity(n)
    return _first(
        g for g in ag.enumerate_group(n)
        if ag.is_involution(g) != (ag.compose(g, g) == ident)
    )


def check_generated_quasipolarities(n):
    direct = ag.enumerate_quasipolarities(n)
    filtered = [g for g in ag.enumerate_group(n) if ag.is_quasipolarity_bruteforce(g)]
    if sorted(direct, key=lambda g: g.sort_key) != filtered:
        return set(direct) ^ set(filtered)


def check_no_quasipolarity_when_u0_is_sigma(n):
    qs = ag.enumerate_quasipolarities(n)
    for v in units_and_involutions(n)[1]:
        sigma, _, u0 = sigma_tau_u0(v, n)
        count = sum(1 for g in qs if g.v == v)
        expected = 0 if u0 == sigma else n // sigma
        if count != expected:
            return v


def check_conjugation_closed_form(n):
    if n > 12:
        return None
    group = ag.enumerate_group(n)
    return _first(
        (h, g) for h in group for g in group
        if ag.conjugate(h, g) != ag.conjugate_closed_form(h, g)
    )


def check_stabilizer_formula(n):
    phi = euler_phi(n)
    group = ag.enumerate_group(n)
    for q in ag.enumerate_quasipolarities(n):
        sigma = sigma_tau_u0(q.v, n)[0]
        orbit = {ag.conjugate(h, q) for h in group}
        if ag.centralizer_size_bruteforce(q, group) != sigma * phi or len(orbit) != n // sigma:
            return q


def check_transitivity(n):
    classes = ag.quasipolarity_conjugacy(n, validate=False)
    linear = [c.v for c in classes]
    if len(linear) != len(set(linear)):
        return linear
    for c in classes:
        if any(m.v != c.v for m in c.members):
            return c.representative


def check_class_count(n):
    classes = ag.quasipolarity_conjugacy(n, validate=False)
    if len(classes) > euler_phi(n):
        return len(classes)
    phi = euler_phi(n)
    return _first(c.representative for c in classes if c.stabilizer_size < 2 * phi)


def check_embedding_homomorphism(n):
    if n > 12:
        return None
    group = ag.enumerate_group(n)
    return _first(
        (g, h) for g in group for h in group
        if affine_embedding(ag.compose(g, h)) != affine_embedding(g) * affine_embedding(h)
    )


def check_perm_quasipolarities(n):
    if n > 20:
        return None
    G = builtin_group("affine", n)
    ours = sorted(affine_embedding(g) for g in ag.enumerate_quasipolarities(n))
    if sorted(quasipolarities_of(G)) != ours:
        return n


# dichotomies


def check_mq_size(n):
    if n > 20:
        return None
    return _first(q for q in ag.enumerate_quasipolarities(n) if len(set(members_of_Mq(q))) != 2 ** (n // 2))


def check_mq_bruteforce(n):
    if n > 12:
        return None
    return _first(
        q for q in ag.enumerate_quasipolarities(n)
        if sorted(members_of_Mq(q)) != sorted(members_of_Mq_bruteforce(q))
    )


def check_centralizer_preserves_mq(n):
    if n > 16:
        return None
    group = ag.enumerate_group(n)
    for q in ag.enumerate_quasipolarities(n):
        mq = set(members_of_Mq(q))
        for g in group:
            if ag.compose(g, q) == ag.compose(q, g) and {act(g, D) for D in mq} != mq:
                return (q, g)


def check_conjugate_mq(n):
    if n > 12:
        return None
    group = ag.enumerate_group(n)
    for q in ag.enumerate_quasipolarities(n):
        mq = members_of_Mq(q)
        for h in group:
            if set(members_of_Mq(ag.conjugate(h, q))) != {act(h, D) for D in mq}:
                return (q, h)


def check_strong_translates(n):
    if n > 12:
        return None
    G = builtin_group("affine", n)
    for c in strong_classes(G, n):
        D, p = c.representative, c.polarity
        images = set()
        for g in ag.enumerate_group(n):
            gD = act(g, D)
            images.add(gD)
            rep = strength(gD, G)
            if not rep.strong or rep.polarity != ag.conjugate(g, p):
                return (D, g)
        if len(images) != len(G):
            return D


# antichain


def check_strategies(n):
    if n > 16:
        return None
    G = builtin_group("affine", n)
    key = lambda cs: [(c.representative, c.orbit_size, c.polarity) for c in cs]
    if key(strong_classes(G, n)) != key(strong_classes(G, n, "via_Mq")):
        return n


def check_antichain(n, kind="affine"):
    G = builtin_group(kind, n)
    reps = [c.representative for c in strong_classes(G, n)]
    if not is_antichain(reps) or not is_complement_free(reps):
        return reps


def check_bound_chain(n, kind="affine"):
    G = builtin_group(kind, n)
    r = bounds(G, n)
    ok = (
        r.exact_strong_count <= r.cota_floor
        and r.exact_strong_count <= r.ekr <= r.purdy <= r.sperner
        and 2 * r.ekr == r.sperner
        and r.ekr * n == r.purdy * (n // 2 + 1)
    )
    if kind == "affine":
        ok = ok and r.cota <= 2 ** (n // 2 - 1)
    return None if ok else r


def check_symmetric_classes(n):
    if n > 8:
        return None
    G = builtin_group("symmetric", n)
    qs = quasipolarities_of(G)
    if len(conjugacy_class(G, qs[0])) != len(qs):
        return qs[0]


def check_lagrange(n, kind="affine"):
    G = builtin_group(kind, n)
    if factorial(n) % len(G):
        return len(G)
    return _first(q for q in quasipolarities_of(G) if len(G) % centralizer_size(G, q))


AFFINE_CHECKS = [
    ("u0 divides sigma", check_u0_divides_sigma),
    ("odd k gives sigma = 2*u0", check_odd_k_sigma),
    ("involution formula vs g*g = e", check_involution_formula),
    ("characterization vs brute force", check_characterization),
    ("generated quasipolarities vs filter", check_generated_quasipolarities),
    ("no quasipolarity when u0 = sigma", check_no_quasipolarity_when_u0_is_sigma),
    ("closed-form conjugation", check_conjugation_closed_form),
    ("stabilizer = sigma*phi, orbit = n/sigma", check_stabilizer_formula),
    ("one class per linear part", check_transitivity),
    ("class count <= phi, stabilizer >= 2*phi", check_class_count),
    ("affine embedding is a homomorphism", check_embedding_homomorphism),
    ("permutation quasipolarities match", check_perm_quasipolarities),
    ("|M_q| = 2^(n/2)", check_mq_size),
    ("centralizer preserves M_q", check_centralizer_preserves_mq),
    ("M_(hqh^-1) = h M_q", check_conjugate_mq),
    ("strong translates keep conjugated polarity", check_strong_translates),
    ("antichain and complement-free", check_antichain),
    ("bound chain", check_bound_chain),
    ("Lagrange", check_lagrange),
]

CROSS_CHECKS = [
    ("M_q construction vs brute force", check_mq_bruteforce),
    ("bruteforce vs via_Mq strategies", check_strategies),
]

OTHER_CHECKS = [
    ("antichain and complement-free", check_antichain),
    ("bound chain", check_bound_chain),
    ("Lagrange", check_lagrange),
]


def run_suite(n_max: int, group="affine", check: bool | None = None, n_min: int = 2):
    """Run every property for each even n in [n_min, n_max]; yields CheckResult."""
    top = n_max
    if group == "symmetric":
        top = min(n_max, 8)
    for n in range(n_min + n_min % 2, top + 1, 2):
        cross = n <= 12 if check is None else check
        if group == "affine":
            suite = AFFINE_CHECKS + (CROSS_CHECKS if cross else [])
        else:
            suite = OTHER_CHECKS + ([("all quasipolarities conjugate", check_symmetric_classes)]
                                    if group == "symmetric" else [])
        for name, fn in suite:
            kwargs = {"kind": group} if fn in (check_antichain, check_bound_chain, check_lagrange) else {}
            if n > 16 and fn in (check_antichain, check_bound_chain):
                continue
            witness = fn(n, **kwargs)
            yield CheckResult(name, n, witness is None, witness)
