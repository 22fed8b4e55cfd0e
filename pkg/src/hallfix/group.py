"""Finite permutation groups with fully enumerated element sets.

Groups are closed exhaustively (no stabilizer chains): every structural query
below walks the complete element list, which keeps all results auditable at
desk scale.  Closure refuses groups larger than a configurable cap.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from math import ceil, log2
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .arith import PiSet, prime_divisors
from .perm import Permutation

#: Default ceiling for exhaustive element enumeration.
DEFAULT_ELEMENT_CAP = 10080

#: Cayley index tables are only built below this order (memory guard).
_TABLE_LIMIT = 2048

#: Normal-subgroup scan enumerates class unions; guard the subset blowup.
_CLASS_SCAN_LIMIT = 20


class CapExceededError(RuntimeError):
    """Closure grew past the configured element cap."""


class NotASubgroupError(ValueError):
    """An operand was expected to lie inside the ambient group."""


class PermGroup:
    """A finite permutation group with its complete, canonically sorted element list."""

    __slots__ = ("degree", "generators", "elements", "_elem_set", "_table", "_index")

    def __init__(self, degree: int, generators: Sequence[Permutation],
                 elements: Sequence[Permutation]) -> None:
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "generators", tuple(generators))
        object.__setattr__(self, "elements", tuple(sorted(elements)))
        object.__setattr__(self, "_elem_set", frozenset(elements))
        object.__setattr__(self, "_table", None)
        object.__setattr__(self, "_index", None)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        # Canonical sort puts the identity first: its image tuple is the
        # lexicographic minimum.
        return self.elements[0]

    def __contains__(self, g: Permutation) -> bool:
        return g in self._elem_set

    def element_set(self) -> FrozenSet[Permutation]:
        return self._elem_set

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self._elem_set <= other._elem_set

    def is_normal_in(self, other: "PermGroup") -> bool:
        if not self.is_subgroup_of(other):
            return False
        return all(_conjugate_set(self._elem_set, g) == self._elem_set
                   for g in other.generators)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    def is_cyclic(self) -> bool:
        return any(g.order() == self.order for g in self.elements)

    def fingerprint(self) -> Tuple[Tuple[int, ...], ...]:
        """Sorted element-image tuples; the canonical dedup / ordering key."""
        return tuple(g.images for g in self.elements)

    def conjugated_by(self, g: Permutation) -> "PermGroup":
        """The subgroup g * self * g^-1 (element-by-element, no re-closure)."""
        ginv = g.inverse()
        elems = [g * x * ginv for x in self.elements]
        gens = [g * x * ginv for x in self.generators] or [self.identity]
        return PermGroup(self.degree, gens, elems)

    def element_index(self, g: Permutation) -> int:
        idx = self._ensure_index()
        return idx[g]

    def _ensure_index(self) -> Dict[Permutation, int]:
        if self._index is None:
            object.__setattr__(self, "_index",
                               {g: i for i, g in enumerate(self.elements)})
        return self._index

    def cayley_table(self) -> Optional[Sequence[array]]:
        """Index-level multiplication table, or None above the memory guard."""
        if self.order > _TABLE_LIMIT:
            return None
        if self._table is None:
            idx = self._ensure_index()
            rows = []
            for a in self.elements:
                rows.append(array("H", (idx[a * b] for b in self.elements)))
            object.__setattr__(self, "_table", tuple(rows))
        return self._table

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, PermGroup) and self.degree == other.degree
                and self._elem_set == other._elem_set)

    def __hash__(self) -> int:
        return hash((self.degree, self._elem_set))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("PermGroup is immutable")

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"PermGroup(degree={self.degree}, order={self.order}, gens=[{gens}])"


def close(generators: Sequence[Permutation], *, degree: Optional[int] = None,
          cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """Close a generating set into the full generated group.

    ``degree`` is required for an empty generating set.  Raises
    :class:`CapExceededError` once the closure grows past ``cap``.
    """
    gens = list(generators)
    if gens:
        deg = gens[0].degree
        if any(g.degree != deg for g in gens):
            raise ValueError("generators must share one degree")
        if degree is not None and degree != deg:
            raise ValueError(f"declared degree {degree} != generator degree {deg}")
    else:
        if degree is None:
            raise ValueError("degree is required for an empty generating set")
        deg = degree

    ident = Permutation.identity(deg)
    seen = {ident}
    queue = [ident]
    while queue:
        x = queue.pop()
        for g in gens:
            y = x * g
            if y not in seen:
                if len(seen) >= cap:
                    raise CapExceededError(
                        f"closure exceeds the element cap {cap}; "
                        "the group is too large for exhaustive mode")
                seen.add(y)
                queue.append(y)
    return PermGroup(deg, gens or [ident], seen)


def trivial_group(degree: int) -> PermGroup:
    ident = Permutation.identity(degree)
    return PermGroup(degree, [ident], [ident])


def group_from_elements(degree: int, elements: Iterable[Permutation]) -> PermGroup:
    """Wrap an already-closed element set, picking a small generating set greedily."""
    elems = sorted(set(elements))
    gens: List[Permutation] = []
    span = {Permutation.identity(degree)}
    for g in elems:
        if g not in span:
            gens.append(g)
            span = _close_set(span | {g}, gens)
            if len(span) == len(elems):
                break
    if not gens:
        gens = [Permutation.identity(degree)]
    group = PermGroup(degree, gens, elems)
    if len(span) != len(elems):
        raise ValueError("element set is not closed under the group operation")
    return group


def _close_set(start: set, gens: Sequence[Permutation]) -> set:
    seen = set(start)
    queue = list(start)
    while queue:
        x = queue.pop()
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _conjugate_set(elems: FrozenSet[Permutation], g: Permutation) -> FrozenSet[Permutation]:
    ginv = g.inverse()
    return frozenset(g * x * ginv for x in elems)


def _require_inside(G: PermGroup, elems: Iterable[Permutation], what: str) -> None:
    for x in elems:
        if x not in G:
            raise NotASubgroupError(f"{what} is not inside the ambient group: {x}")


def centralizer(G: PermGroup, s: "Permutation | PermGroup") -> PermGroup:
    """Subgroup of G commuting with a permutation or with a whole subgroup.

    The target only has to act on the same points, not lie inside G: the
    coprime-action checks take fixed points in a normal subgroup N of
    elements living outside N.
    """
    if isinstance(s, Permutation):
        targets: Sequence[Permutation] = [s]
        degree = s.degree
    else:
        targets = s.generators
        degree = s.degree
    if degree != G.degree:
        raise NotASubgroupError(
            f"centralizer target degree {degree} != group degree {G.degree}")
    elems = [g for g in G.elements if all(g * t == t * g for t in targets)]
    return group_from_elements(G.degree, elems)


def normalizer(G: PermGroup, H: PermGroup) -> PermGroup:
    """Subgroup {g in G : g H g^-1 = H}."""
    if not H.is_subgroup_of(G):
        raise NotASubgroupError("normalizer argument is not a subgroup of G")
    hset = H.element_set()
    elems = [g for g in G.elements if _conjugate_set(hset, g) == hset]
    return group_from_elements(G.degree, elems)


def conjugates(G: PermGroup, H: PermGroup) -> List[PermGroup]:
    """All distinct conjugates g H g^-1, canonically ordered."""
    if not H.is_subgroup_of(G):
        raise NotASubgroupError("conjugates argument is not a subgroup of G")
    seen: Dict[FrozenSet[Permutation], PermGroup] = {}
    for g in G.elements:
        kset = _conjugate_set(H.element_set(), g)
        if kset not in seen:
            seen[kset] = H.conjugated_by(g)
    return sorted(seen.values(), key=PermGroup.fingerprint)


def subgroups_of_order(G: PermGroup, m: int) -> List[PermGroup]:
    """All subgroups of G of order exactly ``m``, by canonical backtracking.

    Generating sets grow element-by-element in the canonical element order.
    A branch is pruned when its closure order fails to divide ``m``, exceeds
    ``m``, or when the freshly added generator is not the least new element
    (which restricts the search to one canonical generating chain per
    subgroup).  Any group of order m is generated by at most ceil(log2 m)
    elements, so chains are short.
    """
    if m < 1 or G.order % m:
        raise ValueError(f"{m} does not divide the group order {G.order}")
    if m == 1:
        return [trivial_group(G.degree)]
    if m == G.order:
        return [G]

    table = G.cayley_table()
    if table is not None:
        found = _subgroup_search_indexed(G, m, table)
    else:
        found = _subgroup_search_direct(G, m)
    return sorted(found, key=PermGroup.fingerprint)


def _subgroup_search_indexed(G: PermGroup, m: int, table: Sequence[array]) -> List[PermGroup]:
    orders = [g.order() for g in G.elements]
    candidates = [i for i in range(G.order) if i != 0 and m % orders[i] == 0]
    max_gens = ceil(log2(m))
    out: List[PermGroup] = []

    def closure(gen_idx: Tuple[int, ...]) -> Optional[FrozenSet[int]]:
        seen = {0}
        queue = [0]
        while queue:
            x = queue.pop()
            row = table[x]
            for g in gen_idx:
                y = row[g]
                if y not in seen:
                    if len(seen) >= m:
                        return None
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def extend(clo: FrozenSet[int], gens: Tuple[int, ...], start: int) -> None:
        for pos in range(start, len(candidates)):
            e = candidates[pos]
            if e in clo:
                continue
            new = closure(gens + (e,))
            if new is None or m % len(new):
                continue
            if min(new - clo) != e:
                continue
            if len(new) == m:
                out.append(group_from_elements(
                    G.degree, (G.elements[i] for i in new)))
            elif len(gens) + 1 < max_gens:
                extend(new, gens + (e,), pos + 1)

    extend(frozenset({0}), (), 0)
    return out


def _subgroup_search_direct(G: PermGroup, m: int) -> List[PermGroup]:
    # Object-level fallback for groups above the Cayley-table guard.
    ident = G.identity
    candidates = [g for g in G.elements if not g.is_identity() and m % g.order() == 0]
    max_gens = ceil(log2(m))
    out: List[PermGroup] = []

    def closure(gens: Tuple[Permutation, ...]) -> Optional[FrozenSet[Permutation]]:
        seen = {ident}
        queue = [ident]
        while queue:
            x = queue.pop()
            for g in gens:
                y = x * g
                if y not in seen:
                    if len(seen) >= m:
                        return None
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def extend(clo: FrozenSet[Permutation], gens: Tuple[Permutation, ...], start: int) -> None:
        for pos in range(start, len(candidates)):
            e = candidates[pos]
            if e in clo:
                continue
            new = closure(gens + (e,))
            if new is None or m % len(new):
                continue
            if min(new - clo) != e:
                continue
            if len(new) == m:
                out.append(group_from_elements(G.degree, new))
            elif len(gens) + 1 < max_gens:
                extend(new, gens + (e,), pos + 1)

    extend(frozenset({ident}), (), 0)
    return out


def conjugacy_classes(G: PermGroup) -> List[Tuple[Permutation, ...]]:
    """Conjugacy classes as canonically sorted element tuples, identity class first."""
    gens = [g for g in G.generators]
    inv = [g.inverse() for g in gens]
    seen: set = set()
    classes: List[Tuple[Permutation, ...]] = []
    for x in G.elements:
        if x in seen:
            continue
        orbit = {x}
        queue = [x]
        while queue:
            y = queue.pop()
            for g, gi in zip(gens, inv):
                z = g * y * gi
                if z not in orbit:
                    orbit.add(z)
                    queue.append(z)
        seen |= orbit
        classes.append(tuple(sorted(orbit)))
    return classes


def normal_subgroups(G: PermGroup) -> List[PermGroup]:
    """All normal subgroups, as class unions closed under the group operation."""
    classes = conjugacy_classes(G)
    rest = classes[1:]
    if len(rest) > _CLASS_SCAN_LIMIT:
        raise RuntimeError(
            f"normal-subgroup scan over {len(rest)} conjugacy classes is out of "
            "desk-scale range")
    out: List[PermGroup] = []
    for mask in range(1 << len(rest)):
        size = 1
        members = [classes[0]]
        for bit, cls in enumerate(rest):
            if mask >> bit & 1:
                size += len(cls)
                members.append(cls)
        if G.order % size:
            continue
        union = frozenset(x for cls in members for x in cls)
        # A conjugation-closed candidate is a subgroup iff one representative
        # per member class maps the candidate into itself.
        if all(all(cls[0] * x in union for x in union) for cls in members):
            out.append(group_from_elements(G.degree, union))
    return sorted(out, key=lambda H: (H.order, H.fingerprint()))


def core_pi(G: PermGroup, pi: PiSet) -> PermGroup:
    """Largest normal subgroup whose order is supported on the primes in pi."""
    best = trivial_group(G.degree)
    candidates = [N for N in normal_subgroups(G)
                  if all(p in pi for p in prime_divisors(N.order))]
    for N in candidates:
        if N.order > best.order:
            best = N
    for N in candidates:
        if not N.is_subgroup_of(best):
            raise AssertionError("pi-core is not unique; normal subgroup scan is broken")
    return best


def core_pi_complement(G: PermGroup, pi: PiSet) -> PermGroup:
    """Largest normal subgroup whose order avoids every prime in pi."""
    best = trivial_group(G.degree)
    candidates = [N for N in normal_subgroups(G)
                  if not any(p in pi for p in prime_divisors(N.order))]
    for N in candidates:
        if N.order > best.order:
            best = N
    for N in candidates:
        if not N.is_subgroup_of(best):
            raise AssertionError("pi'-core is not unique; normal subgroup scan is broken")
    return best


@dataclass(frozen=True)
class GroupHom:
    """A total homomorphism given by an explicit element table."""

    source: PermGroup
    target: PermGroup
    mapping: Dict[Permutation, Permutation] = field(hash=False)

    def __call__(self, x: Permutation) -> Permutation:
        return self.mapping[x]

    def kernel(self) -> PermGroup:
        ident = self.target.identity
        return group_from_elements(
            self.source.degree,
            (x for x, y in self.mapping.items() if y == ident))

    def is_homomorphism(self) -> bool:
        """Full table check; quadratic, intended for desk-scale validation."""
        mp = self.mapping
        return all(mp[x * y] == mp[x] * mp[y]
                   for x in self.source.elements for y in self.source.elements)


def quotient(G: PermGroup, N: PermGroup) -> Tuple[PermGroup, GroupHom]:
    """Quotient as the permutation action of G on the right cosets of N.

    Returns the coset-action group together with the projection homomorphism,
    whose kernel is exactly N.  Cosets are numbered in canonical order, so the
    coset of the identity is point 1.
    """
    if not N.is_normal_in(G):
        raise NotASubgroupError("quotient requires a normal subgroup")
    cosets: List[FrozenSet[Permutation]] = []
    point_of: Dict[Permutation, int] = {}
    for x in G.elements:
        if x in point_of:
            continue
        cs = frozenset(n * x for n in N.elements)
        cosets.append(cs)
        for y in cs:
            point_of[y] = len(cosets)
    reps = [min(cs) for cs in cosets]

    mapping: Dict[Permutation, Permutation] = {}
    for x in G.elements:
        xinv = x.inverse()
        mapping[x] = Permutation(point_of[rep * xinv] for rep in reps)
    q_elems = set(mapping.values())
    q_gens = [mapping[g] for g in G.generators]
    Q = PermGroup(len(cosets), q_gens or [Permutation.identity(len(cosets))], q_elems)
    if Q.order * N.order != G.order:
        raise AssertionError("coset action has the wrong order; quotient is broken")
    return Q, GroupHom(G, Q, mapping)


def is_pi_separable(G: PermGroup, pi: PiSet) -> bool:
    """Whether the alternating pi-core / pi'-core tower reaches the trivial group."""
    current = G
    while current.order > 1:
        npi = core_pi(current, pi)
        if npi.order > 1:
            current = quotient(current, npi)[0]
            continue
        npip = core_pi_complement(current, pi)
        if npip.order > 1:
            current = quotient(current, npip)[0]
            continue
        return False
    return True


def is_solvable(G: PermGroup) -> bool:
    """Solvable iff p-separable for every prime divisor of the order."""
    return all(is_pi_separable(G, PiSet([p])) for p in prime_divisors(G.order))


class FiniteAction:
    """A left action of a group on a labeled finite point set, as a table."""

    __slots__ = ("group", "points", "_rows", "_pos")

    def __init__(self, group: PermGroup, points: Sequence[object],
                 rows: Dict[Permutation, Tuple[int, ...]]) -> None:
        self.group = group
        self.points = tuple(points)
        self._rows = rows
        self._pos = {p: i for i, p in enumerate(self.points)}

    @classmethod
    def build(cls, group: PermGroup, points: Sequence[object],
              func: Callable[[Permutation, object], object]) -> "FiniteAction":
        """Tabulate ``func`` and validate the action axioms.

        The identity must fix every point; compatibility act(g, act(h, x)) ==
        act(gh, x) is checked for generators g against all h, which implies
        the general law by induction on word length.
        """
        pts = tuple(points)
        pos = {p: i for i, p in enumerate(pts)}
        rows = {g: tuple(pos[func(g, p)] for p in pts) for g in group.elements}
        ident_row = rows[group.identity]
        if ident_row != tuple(range(len(pts))):
            raise ValueError("identity does not fix every point")
        for g in group.generators:
            grow = rows[g]
            for h in group.elements:
                hrow = rows[h]
                ghrow = rows[g * h]
                if any(grow[hrow[i]] != ghrow[i] for i in range(len(pts))):
                    raise ValueError("action table violates act(g, act(h, x)) == act(gh, x)")
        return cls(group, pts, rows)

    def act(self, g: Permutation, point: object) -> object:
        return self.points[self._rows[g][self._pos[point]]]

    def fixed_count(self, g: Permutation) -> int:
        row = self._rows[g]
        return sum(1 for i, v in enumerate(row) if v == i)

    def orbit_count(self) -> int:
        total = sum(self.fixed_count(g) for g in self.group.elements)
        if total % self.group.order:
            raise AssertionError("Burnside sum is not divisible by the group order")
        return total // self.group.order
