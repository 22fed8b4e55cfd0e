"""Hall subgroup enumeration, membership counts and cyclic-subgroup lattices.

For a prime set pi, the Hall pi-subgroups of G are taken to be ALL subgroups
whose order is the pi-part of |G| (no conjugacy assumption); for pi-separable
groups this coincides with the usual single conjugacy class, which the test
suite checks rather than assumes.
"""

from __future__ import annotations

from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .arith import PiSet, moebius, prime_divisors, totient
from .group import FiniteAction, PermGroup, close, subgroups_of_order
from .perm import Permutation, format_permutation


class NoHallSubgroupError(ValueError):
    """The group has no subgroup of Hall pi-order (legal for non-separable G)."""


def pi_part(order: int, pi: PiSet) -> int:
    """Largest divisor of ``order`` supported on the primes in pi."""
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    out = 1
    for p in pi:
        while order % p == 0:
            out *= p
            order //= p
    return out


def is_pi_number(n: int, pi: PiSet) -> bool:
    return all(p in pi for p in prime_divisors(n))


class HallContext:
    """A group, a prime set, every Hall subgroup, and the membership-count table.

    ``lam[x]`` is the number of Hall pi-subgroups containing the pi-element x;
    it is defined only on pi-elements and equals the permutation character of
    the conjugation action on the Hall set there.
    """

    __slots__ = ("group", "pi", "hall_order", "halls", "lam", "_action", "_tau")

    def __init__(self, group: PermGroup, pi: PiSet, hall_order: int,
                 halls: Sequence[PermGroup], lam: Mapping[Permutation, int]) -> None:
        self.group = group
        self.pi = pi
        self.hall_order = hall_order
        self.halls = tuple(halls)
        self.lam = dict(lam)
        self._action: Optional[FiniteAction] = None
        self._tau: Optional[Dict[Permutation, int]] = None

    @property
    def num_halls(self) -> int:
        return len(self.halls)

    @property
    def canonical_hall(self) -> PermGroup:
        return self.halls[0]

    def is_pi_element(self, x: Permutation) -> bool:
        return is_pi_number(x.order(), self.pi)

    def lam_of(self, x: Permutation) -> int:
        """Membership count of a pi-element; querying anything else is an error."""
        try:
            return self.lam[x]
        except KeyError:
            raise ValueError(
                f"{format_permutation(x)} is not a pi-element for pi={{{self.pi}}}"
            ) from None

    def conjugation_action(self) -> FiniteAction:
        """Conjugation of the full group on the Hall set (points are hall indices)."""
        if self._action is None:
            by_set = {K.element_set(): i for i, K in enumerate(self.halls)}

            def act(g: Permutation, i: object) -> int:
                return by_set[self.halls[i].conjugated_by(g).element_set()]  # type: ignore[index]

            self._action = FiniteAction.build(
                self.group, tuple(range(len(self.halls))), act)
        return self._action

    def fixed_hall_counts(self) -> Dict[Permutation, int]:
        """tau(g) = number of Hall subgroups normalized by g, for every g in G."""
        if self._tau is None:
            action = self.conjugation_action()
            self._tau = {g: action.fixed_count(g) for g in self.group.elements}
        return self._tau


def build_hall_context(G: PermGroup, pi: PiSet) -> HallContext:
    """Enumerate Hall_pi(G) and tabulate membership counts for every pi-element."""
    n = pi_part(G.order, pi)
    halls = subgroups_of_order(G, n)
    if not halls:
        raise NoHallSubgroupError(
            f"group of order {G.order} has no Hall subgroup for pi={{{pi}}} "
            f"(no subgroup of order {n})")
    hall_sets = [K.element_set() for K in halls]
    lam: Dict[Permutation, int] = {}
    for x in G.elements:
        if is_pi_number(x.order(), pi):
            lam[x] = sum(1 for s in hall_sets if x in s)
    return HallContext(G, pi, n, halls, lam)


class CyclicLattice:
    """The poset of cyclic subgroups of a group, with its Möbius weights.

    ``mu(i, j)`` is the poset Möbius value between subgroups ``i <= j``; on
    this lattice it coincides with the number-theoretic Möbius function of
    the index.  ``weight(i)`` is the column sum f = sum_j mu(i, j).
    """

    __slots__ = ("host", "subgroups", "_sets", "_weights")

    def __init__(self, host: PermGroup, subgroups: Sequence[PermGroup]) -> None:
        self.host = host
        self.subgroups = tuple(subgroups)
        self._sets = [Z.element_set() for Z in self.subgroups]
        self._weights = [
            sum(self.mu(i, j) for j in range(len(self.subgroups)))
            for i in range(len(self.subgroups))
        ]

    def mu(self, i: int, j: int) -> int:
        if not self._sets[i] <= self._sets[j]:
            return 0
        return moebius(len(self._sets[j]) // len(self._sets[i]))

    def weight(self, i: int) -> int:
        return self._weights[i]

    def weights(self) -> Tuple[int, ...]:
        return tuple(self._weights)

    def generator_set(self, i: int) -> Tuple[Permutation, ...]:
        """Elements generating the i-th cyclic subgroup; there are totient(|Z|)."""
        Z = self.subgroups[i]
        gens = tuple(sorted(z for z in Z.elements if z.order() == Z.order))
        if len(gens) != totient(Z.order):
            raise AssertionError("generator count disagrees with the totient")
        return gens

    def partition_identity_holds(self) -> bool:
        """|H| == sum over cyclic Z of |Z| * f(Z)."""
        return self.host.order == sum(
            Z.order * w for Z, w in zip(self.subgroups, self._weights))


def cyclic_lattice(H: PermGroup) -> CyclicLattice:
    """Build the cyclic-subgroup lattice of H."""
    seen: Dict[frozenset, PermGroup] = {}
    for h in H.elements:
        Z = close([h])
        key = Z.element_set()
        if key not in seen:
            seen[key] = Z
    ordered = sorted(seen.values(), key=PermGroup.fingerprint)
    return CyclicLattice(H, ordered)


def moebius_partition_check(H: PermGroup, gamma: Mapping[Permutation, int]) -> bool:
    """Check the Möbius-inversion product identity for a positive-valued gamma.

    The product of gamma over all of H must equal the product over cyclic
    subgroups Z of (product of gamma over Z) raised to the lattice weight
    f(Z), compared exactly in factored form.
    """
    from .arith import FactoredRational

    lhs = FactoredRational.one()
    for x in H.elements:
        lhs = lhs.times_pow(gamma[x], 1)
    lattice = cyclic_lattice(H)
    rhs = FactoredRational.one()
    for i, Z in enumerate(lattice.subgroups):
        inner = FactoredRational.one()
        for z in Z.elements:
            inner = inner.times_pow(gamma[z], 1)
        rhs = rhs.times(inner.power(lattice.weight(i)))
    return lhs == rhs


def lambda_report_lines(ctx: HallContext) -> List[str]:
    """Text report: one line per pi-element in canonical order."""
    out = []
    for x in sorted(ctx.lam):
        out.append(
            f"element {format_permutation(x)} order {x.order()} lambda {ctx.lam[x]}")
    return out


def lambda_report_records(ctx: HallContext) -> List[Dict[str, object]]:
    """JSON-ready report: {element, order, lambda} per pi-element."""
    return [
        {"element": format_permutation(x), "order": x.order(), "lambda": ctx.lam[x]}
        for x in sorted(ctx.lam)
    ]
