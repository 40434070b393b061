"""Crossed homomorphisms and the pointed set H1(K, N).

Conventions (the unique ones consistent with the machine-checked anchors:
F(phi) is a subgroup, N-conjugacy of F(phi) matches the equivalence, and
phi^j is equivalent to phi with witness phi(j')):

    cocycle identity   phi(j j') = phi(j) * act(j, phi(j'))
    coboundary         phi'(j)   = n' * phi(j) * act(j, n)
    conjugate cocycle  phi^j(x)  = act(j', phi(j x j'))   on K^j = j' K j

Enumeration is generator-based with a brute-force oracle alongside; class
representatives are the lexicographically least value tables, and all
reported sets are ordered by representative.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product

from .actions import ActionOnGroup, SemidirectProduct
from .errors import (
    BudgetExceeded,
    DomainMismatch,
    NoPreimageFound,
    NotAbelian,
    NotAComplement,
    NotASubgroup,
    NotNilpotent,
)
from .groups import Group, Subgroup, full_subgroup
from .structure import (
    hall_pprime,
    is_nilpotent,
    is_p_power,
    prime_factors,
    primary_projection,
    sylow_subgroup,
)

log = logging.getLogger(__name__)

GENERATOR_ENUM_BUDGET = 10_000_000
BRUTEFORCE_BUDGET = 1_000_000


@dataclass(frozen=True)
class Cocycle:
    """A crossed homomorphism on a subgroup K of the actor, valued in N."""

    action: ActionOnGroup
    domain: Subgroup
    values: tuple[int, ...]

    def value_at(self, j: int) -> int:
        return self.values[self.domain.position(j)]

    def is_distinguished(self) -> bool:
        return all(v == 0 for v in self.values)

    def __repr__(self) -> str:
        return f"<cocycle on K of order {self.domain.order}: {self.values}>"

    def to_json(self) -> dict:
        return {"domain": list(self.domain.elements), "values": list(self.values)}


def check_cocycle(action: ActionOnGroup, domain: Subgroup, values: tuple[int, ...]) -> bool:
    """Test the cocycle identity over all pairs of the domain."""
    J, N = action.actor, action.target
    pos = domain.position
    mul = N.mul
    for a in domain.elements:
        va = values[pos(a)]
        aa = action.auto[a]
        row = J.mul[a]
        for b in domain.elements:
            if values[pos(row[b])] != mul[va][aa[values[pos(b)]]]:
                return False
    return True


def _generating_sequence(J: Group, K: Subgroup) -> list[int]:
    """Greedy smallest-first generating sequence for K."""
    gens: list[int] = []
    closure = {0}
    for x in K.elements:
        if x not in closure:
            gens.append(x)
            frontier = list(closure)
            closure.add(x)
            frontier.append(x)
            while frontier:
                nxt = []
                for y in frontier:
                    for g in gens:
                        z = J.mul[y][g]
                        if z not in closure:
                            closure.add(z)
                            nxt.append(z)
                frontier = nxt
    return gens


def cocycles(action: ActionOnGroup, K: Subgroup | None = None,
             budget: int = GENERATOR_ENUM_BUDGET) -> list[Cocycle]:
    """The complete set Z1(K, N), ordered by value table.

    Values are chosen on a generating sequence of K and propagated along K's
    Cayley graph; a candidate survives iff the cocycle identity holds against
    every generator, which forces it on all pairs.
    """
    J, N = action.actor, action.target
    if K is None:
        K = full_subgroup(J)
    if K.parent is not J:
        raise NotASubgroup("domain must be a subgroup of the acting group")
    gens = _generating_sequence(J, K)
    if N.order ** len(gens) > budget:
        raise BudgetExceeded(
            f"|N|^#gens = {N.order}^{len(gens)} exceeds budget {budget}"
        )
    pos = K.position
    # Spanning tree of right-multiplication edges, rooted at the identity.
    edges: list[tuple[int, int, int]] = []  # (element, generator slot, product)
    reached = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for slot, g in enumerate(gens):
                y = J.mul[x][g]
                if y not in reached:
                    reached.add(y)
                    edges.append((x, slot, y))
                    nxt.append(y)
        frontier = nxt
    nmul = N.mul
    out: list[Cocycle] = []
    size = K.order
    for assignment in product(range(N.order), repeat=len(gens)):
        values = [0] * size
        ok = True
        for x, slot, y in edges:
            values[pos(y)] = nmul[values[pos(x)]][action.auto[x][assignment[slot]]]
        for x in K.elements:
            vx = values[pos(x)]
            ax = action.auto[x]
            row = J.mul[x]
            for slot, g in enumerate(gens):
                if values[pos(row[g])] != nmul[vx][ax[assignment[slot]]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(Cocycle(action, K, tuple(values)))
    out.sort(key=lambda c: c.values)
    return out


def cocycles_bruteforce(action: ActionOnGroup, K: Subgroup | None = None,
                        budget: int = BRUTEFORCE_BUDGET) -> list[Cocycle]:
    """Independent oracle: test every map K -> N against the cocycle identity.

    Maps are enumerated depth-first in element order; a branch is abandoned
    as soon as some already-assigned pair violates the identity (any
    completion would fail the same pair).  The budget caps explored
    assignments.
    """
    J, N = action.actor, action.target
    if K is None:
        K = full_subgroup(J)
    if K.parent is not J:
        raise NotASubgroup("domain must be a subgroup of the acting group")
    elts = K.elements
    pos = K.position
    size = len(elts)
    nmul = N.mul
    # Pairs (a, b) whose product lands within the first k assigned elements,
    # indexed by the largest element position involved.
    pair_checks: list[list[tuple[int, int, int]]] = [[] for _ in range(size)]
    for ia, a in enumerate(elts):
        for ib, b in enumerate(elts):
            ic = pos(J.mul[a][b])
            pair_checks[max(ia, ib, ic)].append((ia, ib, ic))
    out: list[Cocycle] = []
    values = [0] * size
    explored = 0

    def consistent_at(k: int) -> bool:
        for ia, ib, ic in pair_checks[k]:
            a = elts[ia]
            if values[ic] != nmul[values[ia]][action.auto[a][values[ib]]]:
                return False
        return True

    def descend(k: int) -> None:
        nonlocal explored
        if k == size:
            out.append(Cocycle(action, K, tuple(values)))
            return
        for v in range(N.order):
            explored += 1
            if explored > budget:
                raise BudgetExceeded(f"brute-force oracle exceeded budget {budget}")
            values[k] = v
            if consistent_at(k):
                descend(k + 1)
        values[k] = 0

    # Position 0 is the identity of K; phi(1) = 1 is itself a pair check:
    # start the search at position 0 like any other value.
    descend(0)
    out.sort(key=lambda c: c.values)
    return out


def twist(phi: Cocycle, n: int) -> Cocycle:
    """The cohomologous cocycle j -> n' * phi(j) * act(j, n)."""
    N = phi.action.target
    ninv = N.inv[n]
    values = tuple(
        N.mul[N.mul[ninv][v]][phi.action.auto[j][n]]
        for j, v in zip(phi.domain.elements, phi.values)
    )
    return Cocycle(phi.action, phi.domain, values)


def cohomologous(phi: Cocycle, psi: Cocycle) -> int | None:
    """Least witness n with psi = twist(phi, n), or None."""
    if phi.action is not psi.action:
        raise DomainMismatch("cocycles belong to different actions")
    if phi.domain.elements != psi.domain.elements:
        raise DomainMismatch("cocycles have different domains")
    N = phi.action.target
    for n in range(N.order):
        if twist(phi, n).values == psi.values:
            return n
    return None


class CohomologySet:
    """H1(K, N): all cocycles partitioned into classes, with the class of the
    all-identity cocycle distinguished."""

    def __init__(self, action: ActionOnGroup, domain: Subgroup,
                 classes: list[list[Cocycle]]):
        self.action = action
        self.domain = domain
        self.classes = tuple(tuple(c) for c in classes)
        self._index: dict[tuple[int, ...], int] = {}
        for i, cls in enumerate(self.classes):
            for c in cls:
                self._index[c.values] = i
        zero = tuple([0] * domain.order)
        self.distinguished = self._index[zero]

    @property
    def size(self) -> int:
        return len(self.classes)

    def rep(self, i: int) -> Cocycle:
        return self.classes[i][0]

    def reps(self) -> list[Cocycle]:
        return [cls[0] for cls in self.classes]

    def class_of(self, values: tuple[int, ...] | Cocycle) -> int:
        if isinstance(values, Cocycle):
            values = values.values
        return self._index[values]

    def cocycle_count(self) -> int:
        return sum(len(cls) for cls in self.classes)

    def __repr__(self) -> str:
        return (
            f"<H1: {self.size} classes from {self.cocycle_count()} cocycles "
            f"on K of order {self.domain.order}>"
        )

    def to_json(self) -> dict:
        return {
            "classes": [cls[0].to_json() for cls in self.classes],
            "distinguished": self.distinguished,
        }


def h1(action: ActionOnGroup, K: Subgroup | None = None,
       budget: int = GENERATOR_ENUM_BUDGET) -> CohomologySet:
    """Partition Z1(K, N) by the coboundary relation.

    Classes are the orbits of Z1 under twisting by elements of N; they come
    out ordered by their least member, so the distinguished class is first.
    """
    J = action.actor
    if K is None:
        K = full_subgroup(J)
    key = K.elements
    cached = action._h1_cache.get(key)
    if cached is not None:
        return cached
    zs = cocycles(action, K, budget=budget)
    index = {c.values: i for i, c in enumerate(zs)}
    assigned = [False] * len(zs)
    classes: list[list[Cocycle]] = []
    N = action.target
    for i, c in enumerate(zs):
        if assigned[i]:
            continue
        members = set()
        for n in range(N.order):
            t = twist(c, n)
            j = index[t.values]
            members.add(j)
            assigned[j] = True
        classes.append([zs[j] for j in sorted(members)])
    result = CohomologySet(action, K, classes)
    action._h1_cache[key] = result
    return result


# -- complement correspondence ---------------------------------------------------


def complement_to_cocycle(P: SemidirectProduct, K: Subgroup) -> Cocycle:
    """The cocycle phi_K with F(phi_K) = K, for a complement K of N in N x| J.

    Each j in J factors uniquely as j = n' k with n in N and k in K; the
    cocycle records phi(j) = n, i.e. the element of K over j is (n, j).
    """
    action = P.action
    J, N = action.actor, action.target
    if K.parent is not P.group:
        raise NotAComplement("complement must live in the semidirect product")
    nj = J.order
    by_j: dict[int, int] = {}
    for k in K.elements:
        n, j = divmod(k, nj)
        if j in by_j:
            raise NotAComplement(f"two elements of K project to the same J part {j}")
        by_j[j] = n
    if len(by_j) != nj or K.order != nj:
        raise NotAComplement("subgroup does not complement N")
    domain = full_subgroup(J)
    values = tuple(by_j[j] for j in range(nj))
    phi = Cocycle(action, domain, values)
    if not check_cocycle(action, domain, values):
        raise NotAComplement("complement did not induce a cocycle; corrupt input")
    return phi


def cocycle_to_complement(P: SemidirectProduct, phi: Cocycle) -> Subgroup:
    """F(phi) = { phi(j) j : j in J }, a complement of N in the semidirect product."""
    action = P.action
    if phi.action is not action:
        raise DomainMismatch("cocycle belongs to a different action")
    J = action.actor
    if phi.domain.order != J.order:
        raise NotASubgroup("complement correspondence needs a cocycle on all of J")
    nj = J.order
    return Subgroup(P.group, (phi.value_at(j) * nj + j for j in range(nj)))


# -- restriction, conjugation, invariance ----------------------------------------


def restrict(phi: Cocycle, K2: Subgroup) -> Cocycle:
    """Restriction of a cocycle to a subgroup of its domain."""
    if any(x not in phi.domain for x in K2.elements):
        raise NotASubgroup("restriction target is not contained in the domain")
    values = tuple(phi.value_at(x) for x in K2.elements)
    return Cocycle(phi.action, K2, values)


@dataclass(frozen=True)
class ClassMap:
    """A map of cohomology classes, as a table over source class indices."""

    source: CohomologySet
    target: CohomologySet
    table: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.table[i]

    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    def is_surjective(self) -> bool:
        return set(self.table) == set(range(self.target.size))

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()


def res_h1(H: CohomologySet, K2: Subgroup,
           budget: int = GENERATOR_ENUM_BUDGET) -> ClassMap:
    """The map induced on classes by restricting cocycles to K2."""
    target = h1(H.action, K2, budget=budget)
    table = tuple(target.class_of(restrict(rep, K2)) for rep in H.reps())
    return ClassMap(H, target, table)


def conjugate_cocycle(phi: Cocycle, j: int) -> Cocycle:
    """phi^j on K^j = j' K j, defined by phi^j(x) = act(j', phi(j x j')).

    For phi defined on all of J, phi^j is cohomologous to phi with witness
    phi(j').
    """
    J = phi.action.actor
    K = phi.domain
    domain = Subgroup(J, (J.conj(k, j) for k in K.elements))
    jinv = J.inv[j]
    back = phi.action.auto[jinv]
    values = tuple(back[phi.value_at(J.conj(x, jinv))] for x in domain.elements)
    return Cocycle(phi.action, domain, values)


def fixed_classes(H: CohomologySet, S: Subgroup) -> tuple[int, ...]:
    """Classes of H fixed under conjugation by every element of S.

    Requires S to normalize the domain, so conjugates stay in the same
    cohomology set (the Sylow case in a nilpotent actor).
    """
    K = H.domain
    for s in S.elements:
        if any(K.parent.conj(k, s) not in K for k in K.elements):
            raise DomainMismatch(f"element {s} does not normalize the domain")
    out = []
    for i in range(H.size):
        rep = H.rep(i)
        if all(H.class_of(conjugate_cocycle(rep, s).values) == i for s in S.elements):
            out.append(i)
    return tuple(out)


def invariant_classes(H: CohomologySet, over: Subgroup | None = None,
                      budget: int = GENERATOR_ENUM_BUDGET) -> tuple[int, ...]:
    """J-invariant classes: res to K meet K^j of phi and phi^j agree for all j.

    This is the general notion for arbitrary subgroups; when the domain is a
    normal Sylow subgroup of a nilpotent actor it coincides with
    fixed_classes over the complementary Hall subgroup.
    """
    J = H.action.actor
    S = over if over is not None else full_subgroup(J)
    K = H.domain
    out = []
    for i in range(H.size):
        rep = H.rep(i)
        invariant = True
        for j in S.elements:
            conj = conjugate_cocycle(rep, j)
            inter = Subgroup(J, (x for x in K.elements if x in conj.domain))
            a = restrict(rep, inter)
            b = restrict(conj, inter)
            if cohomologous(a, b) is None:
                invariant = False
                break
        if invariant:
            out.append(i)
    return tuple(out)


# -- primary decomposition --------------------------------------------------------


@dataclass(frozen=True)
class PrimaryPart:
    """The action of J on one primary component N_q of a nilpotent target."""

    prime: int
    parent_action: ActionOnGroup
    action: ActionOnGroup          # J acting on N_q as a standalone group
    to_parent: tuple[int, ...]     # N_q index -> N index
    proj: tuple[int, ...]          # N index -> N_q index (primary projection)


def primary_part(action: ActionOnGroup, q: int) -> PrimaryPart:
    """Build the induced action of J on N_q together with both element maps."""
    N = action.target
    if not is_nilpotent(N):
        raise NotNilpotent("primary components require a nilpotent target")
    part, _, proj_parent = primary_projection(N, q)
    sub, to_parent = part.as_group()
    from_parent = {x: i for i, x in enumerate(to_parent)}
    auto = [
        [from_parent[action.auto[j][x]] for x in to_parent]
        for j in range(action.actor.order)
    ]
    induced = ActionOnGroup(action.actor, sub, auto,
                            name=f"{action.name or 'action'}@{q}")
    proj = tuple(from_parent[proj_parent[n]] for n in range(N.order))
    return PrimaryPart(q, action, induced, to_parent, proj)


def project_to_primary(action: ActionOnGroup, q: int,
                       budget: int = GENERATOR_ENUM_BUDGET
                       ) -> tuple[ActionOnGroup, ClassMap]:
    """The induced action on N_q and the class map H1(J, N) -> H1(J, N_q)."""
    part = primary_part(action, q)
    src = h1(action, budget=budget)
    tgt = h1(part.action, budget=budget)
    table = tuple(
        tgt.class_of(tuple(part.proj[v] for v in rep.values)) for rep in src.reps()
    )
    return part.action, ClassMap(src, tgt, table)


def include_coefficients(part: PrimaryPart, domain: Subgroup | None = None,
                         budget: int = GENERATOR_ENUM_BUDGET) -> ClassMap:
    """H1(K, N_q) -> H1(K, N): value tables reinterpreted in the big group."""
    if domain is None:
        domain = full_subgroup(part.action.actor)
    src = h1(part.action, domain, budget=budget)
    tgt = h1(part.parent_action, domain, budget=budget)
    table = tuple(
        tgt.class_of(tuple(part.to_parent[v] for v in rep.values))
        for rep in src.reps()
    )
    return ClassMap(src, tgt, table)


def shared_primes(action: ActionOnGroup) -> tuple[int, ...]:
    """Primes dividing both |J| and |N|."""
    norder = action.target.order
    return tuple(p for p in prime_factors(action.actor.order) if norder % p == 0)


def extend_from_sylow(action: ActionOnGroup, q: int, class_index: int,
                      budget: int = GENERATOR_ENUM_BUDGET) -> int:
    """Extend a J'_q-fixed class of H1(J_q, N) to a class of H1(J, N).

    First tries the direct recipe ext(j' j) = phi(j) on every representative
    of the class; a representative whose values are pointwise J'_q-fixed
    yields a valid cocycle.  When no representative works, falls back to
    scanning H1(J, N) for a class restricting to the input, which exists by
    the Sylow-wise decomposition; exhausting both routes raises
    NoPreimageFound, which falsifies the decomposition on this instance.
    """
    J = action.actor
    if not is_nilpotent(J):
        raise NotNilpotent("extension requires a nilpotent actor")
    Jq = sylow_subgroup(J, q)
    Jq_hall = hall_pprime(J, q)
    Hq = h1(action, Jq, budget=budget)
    if class_index not in fixed_classes(Hq, Jq_hall):
        raise ValueError(f"class {class_index} is not fixed by the Hall subgroup")
    _, _, proj = primary_projection(J, q)
    full = full_subgroup(J)
    Hfull = h1(action, budget=budget)
    for phi in Hq.classes[class_index]:
        values = tuple(phi.value_at(proj[j]) for j in range(J.order))
        if check_cocycle(action, full, values):
            return Hfull.class_of(values)
    for c in range(Hfull.size):
        rho = restrict(Hfull.rep(c), Jq)
        if Hq.class_of(rho.values) == class_index:
            log.warning(
                "extend_from_sylow: direct recipe failed for q=%d class %d; "
                "preimage found by search", q, class_index,
            )
            return c
    raise NoPreimageFound(
        f"no class of H1(J, N) restricts to fixed class {class_index} at q={q}"
    )


@dataclass(frozen=True)
class PrimeBlock:
    """Per-prime data for the Sylow-wise decomposition."""

    prime: int
    sylow: Subgroup
    hall: Subgroup
    h1_local: CohomologySet
    fixed: tuple[int, ...]


@dataclass(frozen=True)
class DecompositionReport:
    """Outcome of comparing H1(J, N) with the product of fixed local classes."""

    shared_primes: tuple[int, ...]
    blocks: tuple[PrimeBlock, ...]
    h1_full: CohomologySet
    forward: tuple[tuple[int, ...], ...]
    well_defined: bool
    point_preserved: bool
    injective: bool
    surjective: bool
    failure: str | None

    @property
    def bijective(self) -> bool:
        return (
            self.well_defined
            and self.point_preserved
            and self.injective
            and self.surjective
        )

    def to_json(self) -> dict:
        return {
            "shared_primes": list(self.shared_primes),
            "h1_size": self.h1_full.size,
            "local_fixed_sizes": [len(b.fixed) for b in self.blocks],
            "forward": [list(t) for t in self.forward],
            "bijective": self.bijective,
            "failure": self.failure,
        }


def decomposition_map(action: ActionOnGroup,
                      budget: int = GENERATOR_ENUM_BUDGET) -> DecompositionReport:
    """Restrict classes of H1(J, N) to every shared-prime Sylow subgroup and
    check the product map onto the fixed local classes is a pointed bijection.

    Any failure here falsifies the decomposition for this instance and
    signals an implementation bug; the report carries a witness.
    """
    J, N = action.actor, action.target
    if not is_nilpotent(J) or not is_nilpotent(N):
        raise NotNilpotent("decomposition requires nilpotent actor and target")
    primes = shared_primes(action)
    blocks = []
    for p in primes:
        Jp = sylow_subgroup(J, p)
        hall = hall_pprime(J, p)
        local = h1(action, Jp, budget=budget)
        blocks.append(PrimeBlock(p, Jp, hall, local, fixed_classes(local, hall)))
    Hfull = h1(action, budget=budget)
    failure = None
    well_defined = True
    forward: list[tuple[int, ...]] = []
    for i, cls in enumerate(Hfull.classes):
        images = {
            tuple(b.h1_local.class_of(restrict(c, b.sylow)) for b in blocks)
            for c in cls
        }
        if len(images) != 1:
            well_defined = False
            failure = failure or f"class {i} restricts to multiple local class tuples"
        image = min(images)
        for b, local_class in zip(blocks, image):
            if local_class not in b.fixed:
                failure = failure or (
                    f"class {i} restricts at p={b.prime} to class {local_class}, "
                    "which the Hall subgroup does not fix"
                )
        forward.append(image)
    point = tuple(b.h1_local.distinguished for b in blocks)
    point_preserved = forward[Hfull.distinguished] == point
    if not point_preserved:
        failure = failure or "distinguished class does not map to the distinguished tuple"
    injective = len(set(forward)) == len(forward)
    if not injective:
        failure = failure or "two classes restrict to the same local tuple"
    full_target = set(product(*[b.fixed for b in blocks])) if blocks else {()}
    surjective = set(forward) == full_target
    if not surjective and failure is None:
        missing = sorted(full_target - set(forward))[0]
        failure = f"fixed local tuple {missing} has no preimage"
    return DecompositionReport(
        shared_primes=primes,
        blocks=tuple(blocks),
        h1_full=Hfull,
        forward=tuple(forward),
        well_defined=well_defined,
        point_preserved=point_preserved,
        injective=injective,
        surjective=surjective,
        failure=failure,
    )


def primary_product_check(action: ActionOnGroup,
                          budget: int = GENERATOR_ENUM_BUDGET) -> tuple[bool, str | None]:
    """Check that projections to the N_q induce a bijection of H1(J, N) with
    the product over shared primes, and that other primes contribute trivially."""
    N = action.target
    if not is_nilpotent(N) or not is_nilpotent(action.actor):
        raise NotNilpotent("primary product check requires nilpotent groups")
    shared = set(shared_primes(action))
    maps = []
    for q in prime_factors(N.order):
        _, cmap = project_to_primary(action, q, budget=budget)
        if q in shared:
            maps.append(cmap)
        elif cmap.target.size != 1:
            return False, f"prime {q} outside the shared set has a nontrivial H1"
    src = h1(action, budget=budget)
    tuples = [tuple(m.table[i] for m in maps) for i in range(src.size)]
    if len(set(tuples)) != len(tuples):
        return False, "product of primary projections is not injective"
    target = set(product(*[range(m.target.size) for m in maps])) if maps else {()}
    if set(tuples) != target:
        return False, "product of primary projections is not surjective"
    return True, None


# -- abelian cross-check -----------------------------------------------------------


class AbelianH1:
    """H1 with its abelian group structure (pointwise class product)."""

    def __init__(self, H: CohomologySet):
        N = H.action.target
        if not N.is_abelian():
            raise NotAbelian("class products need an abelian coefficient group")
        self.h1 = H
        size = H.size
        table = []
        for i in range(size):
            vi = H.rep(i).values
            row = []
            for k in range(size):
                vk = H.rep(k).values
                prod_values = tuple(N.mul[a][b] for a, b in zip(vi, vk))
                row.append(H.class_of(prod_values))
            table.append(tuple(row))
        self.table = tuple(table)
        self.identity = H.distinguished

    @property
    def order(self) -> int:
        return self.h1.size

    def multiply(self, i: int, k: int) -> int:
        return self.table[i][k]

    def class_order(self, i: int) -> int:
        x, k = i, 1
        while x != self.identity:
            x = self.table[x][i]
            k += 1
        return k

    def primary_parts(self, p: int) -> tuple[int, ...]:
        return tuple(
            i for i in range(self.order) if is_p_power(self.class_order(i), p)
        )


def abelian_h1_group(action: ActionOnGroup, K: Subgroup | None = None,
                     budget: int = GENERATOR_ENUM_BUDGET) -> AbelianH1:
    """H1(K, N) as an abelian group; the actor need not be nilpotent."""
    return AbelianH1(h1(action, K, budget=budget))


@dataclass(frozen=True)
class Eq3Report:
    """Abelian primary decomposition: the product over shared primes of
    J-invariant local classes recovers H1(J, N), via restriction maps that are
    bijections from the p-primary components."""

    shared_primes: tuple[int, ...]
    h1_order: int
    invariant_sizes: tuple[int, ...]
    product_matches: bool
    restrictions_bijective: bool
    failure: str | None

    @property
    def ok(self) -> bool:
        return self.product_matches and self.restrictions_bijective

    def to_json(self) -> dict:
        return {
            "shared_primes": list(self.shared_primes),
            "h1_order": self.h1_order,
            "invariant_sizes": list(self.invariant_sizes),
            "ok": self.ok,
            "failure": self.failure,
        }


def eq3_check(action: ActionOnGroup, budget: int = GENERATOR_ENUM_BUDGET) -> Eq3Report:
    """Verify the abelian primary decomposition of H1(J, N) for abelian N.

    For each shared prime p: the p-primary component of H1(J, N) must
    restrict bijectively onto the J-invariant classes of H1(J_p, N), and the
    invariant class counts must multiply to |H1(J, N)|.
    """
    N = action.target
    if not N.is_abelian():
        raise NotAbelian("the abelian cross-check needs an abelian target")
    J = action.actor
    ab = abelian_h1_group(action, budget=budget)
    primes = shared_primes(action)
    inv_sizes = []
    failure = None
    restrictions_ok = True
    for p in primes:
        Jp = sylow_subgroup(J, p)
        local = h1(action, Jp, budget=budget)
        inv = invariant_classes(local, budget=budget)
        inv_sizes.append(len(inv))
        primary = ab.primary_parts(p)
        images = [local.class_of(restrict(ab.h1.rep(i), Jp)) for i in primary]
        if len(set(images)) != len(images):
            restrictions_ok = False
            failure = failure or f"restriction at p={p} is not injective on the primary part"
        elif set(images) != set(inv):
            restrictions_ok = False
            failure = failure or (
                f"restriction at p={p} does not map the primary part onto the "
                "invariant classes"
            )
    expected = 1
    for s in inv_sizes:
        expected *= s
    product_matches = ab.order == expected
    if not product_matches:
        failure = failure or (
            f"|H1| = {ab.order} but invariant class counts multiply to {expected}"
        )
    return Eq3Report(
        shared_primes=primes,
        h1_order=ab.order,
        invariant_sizes=tuple(inv_sizes),
        product_matches=product_matches,
        restrictions_bijective=restrictions_ok,
        failure=failure,
    )
