"""Exact verifiers for the fixed-point identities.

One entry point per identity: the Möbius-weighted multiplicative product over
a Hall subgroup, its cyclic-Hall special case, the Navarro-Rizo fixed-point
equation for coprime p-group actions (in cleared-exponent form), the additive
non-negativity statement, Wielandt's centralizer product, the symmetrized
character construction, the Burnside orbit-count interpretation, and the
supporting power-sum inequality.  All arithmetic is exact: factored rationals
for products, arbitrary-precision Fractions for sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Mapping, Optional, Tuple

from .arith import (FactoredRational, PiSet, divisors, moebius, prime_divisors,
                    radical, totient)
from .group import FiniteAction, PermGroup, centralizer, conjugacy_classes
from .hall import HallContext, build_hall_context, cyclic_lattice
from .perm import Permutation


@dataclass(frozen=True)
class CoprimeActionScenario:
    """A semidirect decomposition G = N H with coprime normal N and complement H."""

    group: PermGroup
    normal: PermGroup
    complement: PermGroup

    def __post_init__(self) -> None:
        G, N, H = self.group, self.normal, self.complement
        if not N.is_normal_in(G):
            raise ValueError("N is not a normal subgroup of G")
        if not H.is_subgroup_of(G):
            raise ValueError("H is not a subgroup of G")
        if N.order * H.order != G.order:
            raise ValueError("|N| * |H| != |G|: G is not the product N H")
        if len(N.element_set() & H.element_set()) != 1:
            raise ValueError("N and H intersect nontrivially")
        if gcd(N.order, H.order) != 1:
            raise ValueError("the action is not coprime: gcd(|N|, |H|) != 1")


class CharacterTable:
    """An exact rational class function on a group, with chi(1) >= 1."""

    __slots__ = ("group", "values")

    def __init__(self, group: PermGroup, values: Mapping[Permutation, "Fraction | int"],
                 *, validate: bool = True) -> None:
        self.group = group
        self.values = {g: Fraction(v) for g, v in values.items()}
        if validate:
            missing = [g for g in group.elements if g not in self.values]
            if missing:
                raise ValueError(f"character table is missing {len(missing)} elements")
            if self.values[group.identity] < 1:
                raise ValueError("character value at the identity must be >= 1")
            for cls in conjugacy_classes(group):
                vals = {self.values[x] for x in cls}
                if len(vals) > 1:
                    raise ValueError("character table is not constant on a conjugacy class")

    def __call__(self, g: Permutation) -> Fraction:
        return self.values[g]


class SymCharSpec:
    """A permutation group A on n slots plus a rational class function on A."""

    __slots__ = ("slots_group", "alpha", "n", "cycle_counts")

    def __init__(self, slots_group: PermGroup,
                 alpha: Mapping[Permutation, "Fraction | int"]) -> None:
        self.slots_group = slots_group
        self.n = slots_group.degree
        self.alpha = {a: Fraction(v) for a, v in alpha.items()}
        for a in slots_group.elements:
            if a not in self.alpha:
                raise ValueError("alpha is not total on the slot group")
        for cls in conjugacy_classes(slots_group):
            if len({self.alpha[a] for a in cls}) > 1:
                raise ValueError("alpha is not a class function")
        self.cycle_counts = {a: a.cycle_counts() for a in slots_group.elements}
        for a, counts in self.cycle_counts.items():
            if sum(i * c for i, c in counts.items()) != self.n:
                raise AssertionError("cycle counts do not partition the slots")


def _require_member_hall(ctx: HallContext, hall: Optional[PermGroup]) -> PermGroup:
    if hall is None:
        return ctx.canonical_hall
    if not any(hall == K for K in ctx.halls):
        raise ValueError("the given subgroup is not one of the Hall subgroups")
    return hall


def multiplicative_value(ctx: HallContext, hall: Optional[PermGroup] = None, *,
                         use_radical: bool = False) -> FactoredRational:
    """Möbius-weighted product of membership counts over a Hall subgroup.

    Runs over d | n and x in H, multiplying lam(x^d) with exponent
    (n/d) * mu(d), where n is the Hall order.  With ``use_radical`` the
    exponent base n is replaced by its radical; the two results are powers
    of each other, so either detects deviation from 1.
    """
    H = _require_member_hall(ctx, hall)
    base = radical(ctx.hall_order) if use_radical else ctx.hall_order
    acc = FactoredRational.one()
    for d in divisors(base):
        mu = moebius(d)
        if mu == 0:
            continue
        exponent = (base // d) * mu
        for x in H.elements:
            acc = acc.times_pow(ctx.lam_of(x**d), exponent)
    return acc


def power_product_pair(ctx: HallContext, p: int,
                       hall: Optional[PermGroup] = None) -> Tuple[int, int]:
    """The pair (prod lam(x^p), prod lam(x)^p) over a Hall subgroup."""
    H = _require_member_hall(ctx, hall)
    left = right = 1
    for x in H.elements:
        left *= ctx.lam_of(x**p)
        right *= ctx.lam_of(x) ** p
    return left, right


def cyclic_hall_check(G: PermGroup, pi: PiSet) -> bool:
    """The multiplicative identity for a cyclic Hall subgroup of an arbitrary group.

    Holds without any separability hypothesis.  Raises if no Hall subgroup
    exists; requires at least one cyclic member, and checks every cyclic one.
    """
    ctx = build_hall_context(G, pi)
    cyclic_halls = [K for K in ctx.halls if K.is_cyclic()]
    if not cyclic_halls:
        raise ValueError("no Hall subgroup is cyclic; the cyclic case does not apply")
    return all(multiplicative_value(ctx, K).is_one() for K in cyclic_halls)


@dataclass(frozen=True)
class NrCheckResult:
    """Cleared-exponent data for the coprime fixed-point equation.

    ``fixed_order`` is |C_N(P)|.  The fractional exponents are cleared by
    raising to |P| * (p - 1): the identity asserts

        fixed_order ** (|P| * (p - 1))  ==  prod |C_N(x)|^p / prod |C_N(x^p)|

    and the membership-count form asserts prod lam(x^p) == prod lam(x)^p
    with lam(x) = |C_N(x) : C_N(P)|.
    """

    p: int
    complement_order: int
    fixed_order: int
    cleared_rhs: FactoredRational
    eq2_left: FactoredRational
    eq2_right: FactoredRational

    @property
    def cleared_lhs(self) -> FactoredRational:
        return FactoredRational.from_int(self.fixed_order).power(
            self.complement_order * (self.p - 1))

    @property
    def nr_holds(self) -> bool:
        return self.cleared_lhs == self.cleared_rhs

    @property
    def nr2_holds(self) -> bool:
        return self.eq2_left == self.eq2_right

    @property
    def holds(self) -> bool:
        return self.nr_holds and self.nr2_holds


def navarro_rizo_check(scenario: CoprimeActionScenario,
                       p: Optional[int] = None) -> NrCheckResult:
    """Evaluate both cleared fixed-point identities for a p-group acting coprimely."""
    N, P = scenario.normal, scenario.complement
    primes = prime_divisors(P.order)
    if len(primes) != 1:
        raise ValueError(f"the complement has order {P.order}; it is not a p-group")
    if p is None:
        p = primes[0]
    elif p != primes[0]:
        raise ValueError(f"{p} does not match the complement's prime {primes[0]}")

    cent: Dict[Permutation, int] = {}
    for x in P.elements:
        cent[x] = centralizer(N, x).order
    fixed = centralizer(N, P).order

    rhs = FactoredRational.one()
    eq2_left = FactoredRational.one()
    eq2_right = FactoredRational.one()
    for x in P.elements:
        xp = x**p
        rhs = rhs.times_pow(cent[x], p).times_pow(cent[xp], -1)
        if cent[x] % fixed or cent[xp] % fixed:
            raise AssertionError("fixed subgroup does not divide a centralizer")
        eq2_left = eq2_left.times_pow(cent[xp] // fixed, 1)
        eq2_right = eq2_right.times_pow(cent[x] // fixed, p)
    return NrCheckResult(p, P.order, fixed, rhs, eq2_left, eq2_right)


def additive_value(ctx: HallContext, hall: Optional[PermGroup] = None) -> Fraction:
    """The Möbius-weighted power sum (1/n^2) sum_d mu(d) sum_h lam(h^d)^(n/d).

    The callers assert that this is a non-negative integer, zero exactly when
    the Hall subgroup is normal and nontrivial.
    """
    H = _require_member_hall(ctx, hall)
    n = ctx.hall_order
    total = 0
    for d in divisors(n):
        mu = moebius(d)
        if mu == 0:
            continue
        k = n // d
        total += mu * sum(ctx.lam_of(h**d) ** k for h in H.elements)
    return Fraction(total, n * n)


def additive_values_all_halls(ctx: HallContext) -> Dict[int, Fraction]:
    """Cross-check helper: the additive value per Hall subgroup index."""
    return {i: additive_value(ctx, K) for i, K in enumerate(ctx.halls)}


@dataclass(frozen=True)
class WielandtResult:
    lhs: FactoredRational
    rhs: FactoredRational

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def wielandt_check(scenario: CoprimeActionScenario) -> WielandtResult:
    """Wielandt's coprime fixed-point product over the cyclic lattice.

    lhs = |C_N(H)| ^ |H|;  rhs = product over cyclic Z <= H of
    |C_N(Z)| ^ (|Z| * f(Z)).  (The identity is multiplicative.)
    """
    N, H = scenario.normal, scenario.complement
    lhs = FactoredRational.from_int(centralizer(N, H).order).power(H.order)
    lattice = cyclic_lattice(H)
    rhs = FactoredRational.one()
    for i, Z in enumerate(lattice.subgroups):
        rhs = rhs.times_pow(centralizer(N, Z).order, Z.order * lattice.weight(i))
    return WielandtResult(lhs, rhs)


def chain_product_value(scenario: CoprimeActionScenario, n: int) -> FactoredRational:
    """(|C_N(H)|^-|H| * prod |C_N(Z)|^(|Z| f(Z))) ^ totient(n), exactly."""
    N, H = scenario.normal, scenario.complement
    lattice = cyclic_lattice(H)
    inner = FactoredRational.from_int(centralizer(N, H).order).power(-H.order)
    for i, Z in enumerate(lattice.subgroups):
        inner = inner.times_pow(centralizer(N, Z).order, Z.order * lattice.weight(i))
    return inner.power(totient(n))


def symmetrized_char(spec: SymCharSpec, chi: CharacterTable,
                     h: Permutation) -> Fraction:
    """The cycle-indexed symmetrization of chi at h.

    (1/|A|) sum over a in A of alpha(a) * prod_i chi(h^i)^(c_i(a)), where
    c_i(a) counts length-i cycles of a on the slots.
    """
    if h not in chi.group:
        raise ValueError("h is not in the character's group")
    A = spec.slots_group
    powers = {i: chi(h**i) for i in range(1, spec.n + 1)}
    total = Fraction(0)
    for a in A.elements:
        term = spec.alpha[a]
        for i, c in spec.cycle_counts[a].items():
            term *= powers[i] ** c
        total += term
    return total / A.order


def cyclic_symmetrized_char(chi: CharacterTable, n: int, h: Permutation) -> Fraction:
    """Specialization for a full n-cycle slot group with a faithful weight.

    (1/n) sum over d | n of mu(d) * chi(h^d)^(n/d); the per-divisor weight
    collapses to the Möbius function.
    """
    if h not in chi.group:
        raise ValueError("h is not in the character's group")
    total = Fraction(0)
    for d in divisors(n):
        mu = moebius(d)
        if mu == 0:
            continue
        total += mu * chi(h**d) ** (n // d)
    return total / n


def burnside_orbit_count(H: PermGroup, base_action: FiniteAction, k: int,
                         tuple_cap: Optional[int] = 10**7) -> int:
    """Orbits of H on k-tuples under the diagonal action, via fixed-point powers.

    The count is (1/|H|) * sum over h of fix(h)^k; no tuples are enumerated,
    but the nominal tuple-space size is still capped unless ``tuple_cap`` is
    None.
    """
    if k < 1:
        raise ValueError("tuple length must be positive")
    size = len(base_action.points) ** k
    if tuple_cap is not None and size > tuple_cap:
        raise ValueError(f"tuple space of size {size} exceeds the cap {tuple_cap}")
    total = 0
    for h in H.elements:
        total += base_action.fixed_count(h) ** k
    if total % H.order:
        raise AssertionError("Burnside sum is not divisible by |H|")
    return total // H.order


def power_subgroup(H: PermGroup, d: int) -> PermGroup:
    """The subgroup of d-th powers of an abelian group."""
    if not H.is_abelian():
        raise ValueError("power subgroups are only formed for abelian groups")
    from .group import group_from_elements

    return group_from_elements(H.degree, {h**d for h in H.elements})


def interpretation_check(ctx: HallContext, hall: Optional[PermGroup] = None) -> bool:
    """Orbit-count decomposition of the additive value for an abelian Hall subgroup.

    Checks additive_value == (1/n) sum over d | n of mu(d) * (number of orbits
    of the d-th power subgroup H^d on Hall-set (n/d)-tuples).
    """
    H = _require_member_hall(ctx, hall)
    if not H.is_abelian():
        raise ValueError("the Hall subgroup is not abelian; power subgroups "
                         "are not formed here")
    n = ctx.hall_order
    action = ctx.conjugation_action()
    total = Fraction(0)
    for d in divisors(n):
        mu = moebius(d)
        if mu == 0:
            continue
        Hd = power_subgroup(H, d)
        orbits = burnside_orbit_count(Hd, action, n // d, tuple_cap=None)
        total += Fraction(mu * orbits, n)
    return total == additive_value(ctx, H)


def power_sum_bound_holds(base: int, n: int) -> bool:
    """Exactly evaluate n * sum over 1 != d | n of base^(n/d) < base^n."""
    if base < 3 or n < 2:
        raise ValueError("the bound is only claimed for base >= 3 and n >= 2")
    tail = sum(base ** (n // d) for d in divisors(n) if d != 1)
    return n * tail < base**n


def conjugation_character(ctx: HallContext) -> CharacterTable:
    """Fixed-Hall counts as a character of the full group."""
    return CharacterTable(ctx.group, ctx.fixed_hall_counts(), validate=False)


def hall_membership_character(ctx: HallContext, hall: Optional[PermGroup] = None) -> CharacterTable:
    """Membership counts restricted to a Hall subgroup, as a character of it."""
    H = _require_member_hall(ctx, hall)
    return CharacterTable(H, {h: ctx.lam_of(h) for h in H.elements}, validate=False)


def curiosity_value(G: PermGroup, target_pi: PiSet,
                    n: Optional[int] = None) -> Fraction:
    """Möbius-weighted power sum of the conjugation character over the whole group.

    tau counts the Hall target_pi-subgroups normalized by each element; the
    value is (1/n^2) sum over d | n of mu(d) * sum over g in G of
    tau(g^d)^(n/d), with n defaulting to |G|.  Exact, however large.
    """
    ctx = build_hall_context(G, target_pi)
    tau = ctx.fixed_hall_counts()
    if n is None:
        n = G.order
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    for d in divisors(n):
        mu = moebius(d)
        if mu == 0:
            continue
        k = n // d
        total += mu * sum(tau[g**d] ** k for g in G.elements)
    return Fraction(total, n * n)
