"""Structural predicates and decompositions: nilpotency, Sylow and Hall
subgroups, subgroup enumeration, complements, and local conjugacy."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded, NotNilpotent, SearchBudgetExceeded
from .groups import Group, Subgroup, are_conjugate_subgroups, normalizer, subgroup_generated

DEFAULT_ENUM_BUDGET = 200_000


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending, by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    m = 1
    while n % p == 0:
        n //= p
        m *= p
    return m


def is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def lower_central_series(G: Group) -> list[Subgroup]:
    """G = g1 >= g2 >= ... with g_{i+1} = [g_i, G], until the series stabilizes."""
    series = [Subgroup(G, range(G.order))]
    while True:
        cur = series[-1]
        comms = {G.commutator(x, g) for x in cur.elements for g in range(G.order)}
        nxt = subgroup_generated(G, comms)
        if nxt.elements == cur.elements:
            break
        series.append(nxt)
        if nxt.is_trivial():
            break
    return series


def is_nilpotent(G: Group) -> bool:
    return lower_central_series(G)[-1].is_trivial()


def is_nilpotent_subgroup(H: Subgroup) -> bool:
    if H.is_whole_group():
        return is_nilpotent(H.parent)
    sub, _ = H.as_group()
    return is_nilpotent(sub)


def sylow_subgroup(G: Group, p: int, within: Subgroup | None = None,
                   budget: int = 10_000) -> Subgroup:
    """A Sylow p-subgroup of G (or of `within`), as a subgroup of G.

    For a nilpotent ambient this is the unique set of p-power-order elements.
    Otherwise a p-subgroup is grown by normalizer climbing: while |P| is short
    of the full p-part, some g in the normalizer of P has g^p in P, and
    adjoining it enlarges P.  Any valid Sylow subgroup is accepted.
    """
    if p < 2 or prime_factors(p) != [p]:
        raise ValueError(f"{p} is not prime")
    domain = within.elements if within is not None else range(G.order)
    domain_set = set(domain)
    total = len(domain_set)
    target = p_part(total, p)
    torsion = [x for x in domain if is_p_power(G.element_order(x), p)]
    if len(torsion) == target:
        # Unique Sylow subgroup (nilpotent case): the p-torsion is closed.
        return Subgroup(G, torsion)
    if target == 1:
        return Subgroup(G, (0,))
    seed = min(torsion[1:], key=lambda x: (G.element_order(x), x))
    P = subgroup_generated(G, [seed])
    steps = 0
    while P.order < target:
        norm = [g for g in normalizer(G, P).elements if g in domain_set]
        grew = False
        for g in norm:
            if g in P:
                continue
            if G.power(g, p) in P:
                P = subgroup_generated(G, P.elements + (g,))
                grew = True
                break
        steps += 1
        if not grew or steps > budget:
            raise SearchBudgetExceeded(
                f"sylow search stalled at order {P.order} of {target}"
            )
    return P


def hall_pprime(J: Group, p: int) -> Subgroup:
    """Hall p'-subgroup of a nilpotent group: all elements of order prime to p."""
    if not is_nilpotent(J):
        raise NotNilpotent("Hall p'-subgroups are only computed for nilpotent groups")
    return Subgroup(J, (x for x in range(J.order) if J.element_order(x) % p != 0))


@dataclass(frozen=True)
class NilpotentDecomposition:
    """A nilpotent group as the internal direct product of its Sylow parts."""

    parent: Group
    primes: tuple[int, ...]
    sylow_parts: tuple[Subgroup, ...]

    def part(self, p: int) -> Subgroup:
        return self.sylow_parts[self.primes.index(p)]


def nilpotent_decomposition(G: Group) -> NilpotentDecomposition:
    if not is_nilpotent(G):
        raise NotNilpotent("group is not nilpotent")
    primes = tuple(prime_factors(G.order))
    parts = tuple(sylow_subgroup(G, p) for p in primes)
    # Internal direct product sanity: orders multiply out and parts are normal.
    total = 1
    for part in parts:
        total *= part.order
        if not part.is_normal():
            raise NotNilpotent(f"Sylow part of order {part.order} is not normal")
    if total != G.order:
        raise NotNilpotent("Sylow part orders do not multiply to the group order")
    return NilpotentDecomposition(G, primes, parts)


def primary_projection(G: Group, p: int) -> tuple[Subgroup, Subgroup, tuple[int, ...]]:
    """For nilpotent G: (G_p, G_p', projection table G -> G_p).

    Each g factors uniquely as g = g_p * g_p' with commuting parts of coprime
    order; the table maps g to g_p.
    """
    if not is_nilpotent(G):
        raise NotNilpotent("primary projection requires a nilpotent group")
    part = sylow_subgroup(G, p)
    copart = hall_pprime(G, p)
    coset = copart._set
    mul, inv = G.mul, G.inv
    proj = []
    for g in range(G.order):
        for np_ in part.elements:
            if mul[inv[np_]][g] in coset:
                proj.append(np_)
                break
        else:
            raise NotNilpotent(f"element {g} has no primary factorization")
    return part, copart, tuple(proj)


def enumerate_subgroups_of_order(
    G: Group, m: int, max_gens: int = 3, budget: int = DEFAULT_ENUM_BUDGET
) -> list[Subgroup]:
    """All subgroups of order m generated by at most max_gens elements.

    Complete whenever every group of order m is max_gens-generated; the
    default of 3 covers all orders up to 8, and p-groups of order p^k need at
    most k generators.  Candidates are grown by adjoining generators in
    ascending index order, pruning closures whose order does not divide m.
    """
    if m <= 0 or G.order % m != 0:
        raise ValueError(f"order {m} does not divide |G| = {G.order}")
    if m == 1:
        return [Subgroup(G, (0,))]
    if m == G.order:
        return [Subgroup(G, range(G.order))]
    found: set[tuple[int, ...]] = set()
    # Layers of (element set, largest generator index used so far).
    layer: dict[tuple[int, ...], int] = {(0,): -1}
    work = 0
    for _ in range(max_gens):
        nxt: dict[tuple[int, ...], int] = {}
        for elts, last in sorted(layer.items()):
            members = set(elts)
            for g in range(last + 1, G.order):
                if g in members:
                    continue
                if m % G.element_order(g) != 0:
                    continue
                work += 1
                if work > budget:
                    raise BudgetExceeded(
                        f"subgroup enumeration exceeded budget {budget}"
                    )
                closure = subgroup_generated(G, elts + (g,))
                if m % closure.order != 0:
                    continue
                key = closure.elements
                if closure.order == m:
                    found.add(key)
                elif key not in nxt or nxt[key] > g:
                    nxt[key] = g
        layer = nxt
        if not layer:
            break
    return [Subgroup(G, elts) for elts in sorted(found)]


def complements(G: Group, N: Subgroup, max_gens: int = 3,
                budget: int = DEFAULT_ENUM_BUDGET) -> list[Subgroup]:
    """All complements K of a normal subgroup N: K meets N trivially, KN = G.

    Enumerated through enumerate_subgroups_of_order(|G|/|N|), so the same
    generator bound and completeness envelope apply.
    """
    if not N.is_normal():
        raise ValueError("complements are computed against a normal subgroup")
    m = G.order // N.order
    out = []
    for K in enumerate_subgroups_of_order(G, m, max_gens=max_gens, budget=budget):
        if sum(1 for x in K.elements if x in N) == 1:
            out.append(K)
    return out


def subgroup_conjugacy_classes(
    G: Group, subs: list[Subgroup], under: Subgroup | None = None
) -> list[list[int]]:
    """Partition a list of subgroups into conjugacy classes.

    Conjugating elements range over `under` (default: all of G); classes are
    returned as index lists in first-seen order.
    """
    movers = under.elements if under is not None else range(G.order)
    index = {S.elements: i for i, S in enumerate(subs)}
    seen = [False] * len(subs)
    classes: list[list[int]] = []
    for i, S in enumerate(subs):
        if seen[i]:
            continue
        members = set()
        for u in movers:
            key = tuple(sorted(G.conj(x, u) for x in S.elements))
            j = index.get(key)
            if j is not None:
                members.add(j)
                seen[j] = True
        classes.append(sorted(members))
    return classes


def locally_conjugate(G: Group, H: Subgroup, K: Subgroup) -> bool:
    """Whether, for every prime p, Sylow p-subgroups of H and K are conjugate in G.

    Since all Sylow p-subgroups of H are conjugate within H, one
    representative per side decides the whole condition.
    """
    if H.order != K.order:
        return False
    for p in prime_factors(H.order):
        sh = sylow_subgroup(G, p, within=H)
        sk = sylow_subgroup(G, p, within=K)
        if are_conjugate_subgroups(G, sh, sk) is None:
            return False
    return True
