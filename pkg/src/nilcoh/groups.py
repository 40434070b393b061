"""Finite groups as dense multiplication tables with 0-based element indices.

Every group lives on elements 0..order-1 with index 0 the identity; all
higher-level algorithms are table-driven scans.  Conjugation is g^y = y' g y
(inverse on the left), and all values are immutable once validated.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import NoIdentity, NoInverse, NotAssociative, NotNormal, OrderCapExceeded

DEFAULT_ORDER_CAP = 2048


class Group:
    """A finite group given by its full multiplication table.

    The table is validated at construction: two-sided identity at index 0,
    two-sided inverses, and associativity over all triples.
    """

    __slots__ = ("order", "mul", "inv", "name", "element_names")

    def __init__(
        self,
        mul: Sequence[Sequence[int]],
        name: str | None = None,
        element_names: Sequence[str] | None = None,
    ):
        table = tuple(tuple(int(x) for x in row) for row in mul)
        n = len(table)
        if n == 0:
            raise NoIdentity("empty table")
        for i, row in enumerate(table):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            for x in row:
                if not 0 <= x < n:
                    raise ValueError(f"table entry {x} out of range [0, {n - 1}]")
        if any(table[0][x] != x or table[x][0] != x for x in range(n)):
            raise NoIdentity("index 0 is not a two-sided identity")
        _check_associative(table)
        inv = [-1] * n
        for a in range(n):
            for b in range(n):
                if table[a][b] == 0 and table[b][a] == 0:
                    inv[a] = b
                    break
            else:
                raise NoInverse(a)
        self.order = n
        self.mul = table
        self.inv = tuple(inv)
        self.name = name
        self.element_names = tuple(element_names) if element_names is not None else None

    def elements(self) -> range:
        return range(self.order)

    def op(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def conj(self, g: int, by: int) -> int:
        """g^by = by' * g * by."""
        row = self.mul[self.inv[by]]
        return self.mul[row[g]][by]

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a' b' a b."""
        t = self.mul[self.inv[a]][self.inv[b]]
        return self.mul[self.mul[t][a]][b]

    def element_order(self, a: int) -> int:
        x, k = a, 1
        while x != 0:
            x = self.mul[x][a]
            k += 1
        return k

    def power(self, a: int, k: int) -> int:
        k %= self.element_order(a)
        x = 0
        for _ in range(k):
            x = self.mul[x][a]
        return x

    def is_abelian(self) -> bool:
        return all(
            self.mul[a][b] == self.mul[b][a]
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )

    def same_table(self, other: "Group") -> bool:
        return self.order == other.order and self.mul == other.mul

    def label(self, a: int) -> str:
        if self.element_names is not None:
            return self.element_names[a]
        return str(a)

    def __repr__(self) -> str:
        tag = self.name or "Group"
        return f"<{tag} of order {self.order}>"

    def to_json(self) -> dict:
        return {"kind": "table", "n": self.order, "mul": [list(row) for row in self.mul]}


def _check_associative(table: tuple[tuple[int, ...], ...]) -> None:
    # One row at a time keeps memory at O(n^2) while staying vectorized.
    m = np.asarray(table, dtype=np.int64)
    for a in range(len(table)):
        left = m[m[a]]          # left[b, c]  = m[m[a, b], c]
        right = m[a][m]         # right[b, c] = m[a, m[b, c]]
        if not np.array_equal(left, right):
            b, c = np.argwhere(left != right)[0]
            raise NotAssociative(a, int(b), int(c))


class Subgroup:
    """A validated subset of a parent group, closed under product and inverse."""

    __slots__ = ("parent", "elements", "_set", "_pos")

    def __init__(self, parent: Group, elements: Iterable[int]):
        elts = tuple(sorted({int(x) for x in elements}))
        if not elts or elts[0] != 0:
            raise ValueError("subgroup must contain the identity (index 0)")
        if elts[-1] >= parent.order:
            raise ValueError(f"element {elts[-1]} outside parent of order {parent.order}")
        members = frozenset(elts)
        mul = parent.mul
        for a in elts:
            if parent.inv[a] not in members:
                raise ValueError(f"subgroup not closed under inverse at {a}")
            for b in elts:
                if mul[a][b] not in members:
                    raise ValueError(f"subgroup not closed under product at ({a}, {b})")
        if parent.order % len(elts) != 0:
            raise ValueError("subgroup order does not divide parent order")
        self.parent = parent
        self.elements = elts
        self._set = members
        self._pos = {x: i for i, x in enumerate(elts)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self._set

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.elements))

    def __repr__(self) -> str:
        return f"<Subgroup of order {self.order} in {self.parent!r}>"

    def position(self, x: int) -> int:
        """Index of parent element x within this subgroup's element list."""
        return self._pos[x]

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def is_whole_group(self) -> bool:
        return len(self.elements) == self.parent.order

    def conjugate_by(self, g: int) -> "Subgroup":
        """The subgroup {h^g : h in H} for h^g = g' h g."""
        G = self.parent
        return Subgroup(G, (G.conj(h, g) for h in self.elements))

    def is_normal(self) -> bool:
        G = self.parent
        return all(
            G.conj(h, g) in self._set for g in range(G.order) for h in self.elements
        )

    def as_group(self) -> tuple[Group, tuple[int, ...]]:
        """Re-index this subgroup as a standalone Group.

        Returns the group together with the map new-index -> parent-index.
        Parent identity 0 is the least element, so it lands at new index 0.
        """
        elts = self.elements
        pos = self._pos
        mul = self.parent.mul
        table = [[pos[mul[a][b]] for b in elts] for a in elts]
        names = None
        if self.parent.element_names is not None:
            names = [self.parent.element_names[x] for x in elts]
        return Group(table, name=None, element_names=names), elts

    def to_json(self) -> list[int]:
        return list(self.elements)


class GroupHom:
    """A homomorphism between table groups, stored as a per-element image list."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source: Group, target: Group, images: Sequence[int]):
        imgs = tuple(int(x) for x in images)
        if len(imgs) != source.order:
            raise ValueError("image list length does not match source order")
        if any(not 0 <= x < target.order for x in imgs):
            raise ValueError("image outside target group")
        if imgs[0] != 0:
            raise ValueError("homomorphism must send identity to identity")
        smul, tmul = source.mul, target.mul
        for a in range(source.order):
            for b in range(source.order):
                if imgs[smul[a][b]] != tmul[imgs[a]][imgs[b]]:
                    raise ValueError(f"not a homomorphism at pair ({a}, {b})")
        self.source = source
        self.target = target
        self.images = imgs

    def __call__(self, x: int) -> int:
        return self.images[x]

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, (x for x in range(self.source.order) if self.images[x] == 0))

    def image(self) -> Subgroup:
        return Subgroup(self.target, set(self.images))

    def is_injective(self) -> bool:
        return len(set(self.images)) == self.source.order

    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.target.order


# -- constructors --------------------------------------------------------------


def group_from_table(table: Sequence[Sequence[int]], name: str | None = None,
                     element_names: Sequence[str] | None = None) -> Group:
    """Validate a raw multiplication table and canonicalize the identity to 0."""
    rows = [list(int(x) for x in row) for row in table]
    n = len(rows)
    if n == 0:
        raise NoIdentity("empty table")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError(f"row {i} has length {len(row)}, expected {n}")
        for x in row:
            if not 0 <= x < n:
                raise ValueError(f"table entry {x} out of range [0, {n - 1}]")
    e = next(
        (c for c in range(n) if all(rows[c][x] == x and rows[x][c] == x for x in range(n))),
        None,
    )
    if e is None:
        raise NoIdentity("no two-sided identity element")
    if e != 0:
        # Swap labels 0 and e.
        sigma = list(range(n))
        sigma[0], sigma[e] = e, 0
        rows = [[sigma[rows[sigma[a]][sigma[b]]] for b in range(n)] for a in range(n)]
        if element_names is not None:
            names = list(element_names)
            names[0], names[e] = names[e], names[0]
            element_names = names
    return Group(rows, name=name, element_names=element_names)


def group_from_permutations(
    generators: Sequence[Sequence[int]],
    degree: int | None = None,
    order_cap: int = DEFAULT_ORDER_CAP,
    name: str | None = None,
) -> Group:
    """Closure of a set of permutations under composition, as a table group.

    Permutations act on points 0..degree-1; the product p*q acts by
    (p*q)(i) = p(q(i)).  Raises OrderCapExceeded if the closure grows past
    order_cap.
    """
    gens = [tuple(int(x) for x in p) for p in generators]
    if degree is None:
        degree = len(gens[0]) if gens else 0
    for p in gens:
        if len(p) != degree or sorted(p) != list(range(degree)):
            raise ValueError(f"{p} is not a permutation of 0..{degree - 1}")
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(degree))
                if q not in seen:
                    if len(seen) >= order_cap:
                        raise OrderCapExceeded(f"closure exceeds cap {order_cap}")
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    elts = sorted(seen)  # identity is lexicographically least, so it sits at 0
    index = {p: i for i, p in enumerate(elts)}
    table = [
        [index[tuple(p[q[i]] for i in range(degree))] for q in elts]
        for p in elts
    ]
    return Group(table, name=name)


def subgroup_generated(G: Group, seeds: Iterable[int]) -> Subgroup:
    """Smallest subgroup of G containing the seed elements."""
    gens = sorted({int(x) for x in seeds})
    for x in gens:
        if not 0 <= x < G.order:
            raise ValueError(f"seed {x} outside group of order {G.order}")
    mul = G.mul
    members = {0}
    members.update(gens)
    frontier = list(members)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul[x][g]
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(G, members)


def full_subgroup(G: Group) -> Subgroup:
    return Subgroup(G, range(G.order))


def trivial_subgroup(G: Group) -> Subgroup:
    return Subgroup(G, (0,))


# -- classical constructions ----------------------------------------------------


def center(G: Group) -> Subgroup:
    """Elements commuting with everything."""
    mul = G.mul
    return Subgroup(
        G,
        (
            z
            for z in range(G.order)
            if all(mul[z][g] == mul[g][z] for g in range(G.order))
        ),
    )


def centralizer(G: Group, H: Subgroup) -> Subgroup:
    mul = G.mul
    return Subgroup(
        G,
        (g for g in range(G.order) if all(mul[g][h] == mul[h][g] for h in H.elements)),
    )


def normalizer(G: Group, H: Subgroup) -> Subgroup:
    members = H._set
    return Subgroup(
        G,
        (
            g
            for g in range(G.order)
            if all(G.conj(h, g) in members for h in H.elements)
        ),
    )


def quotient(G: Group, N: Subgroup) -> tuple[Group, GroupHom]:
    """Quotient group G/N on sorted coset representatives, with the projection.

    Raises NotNormal (with a witnessing pair) when N is not normal in G.
    """
    for g in range(G.order):
        for h in N.elements:
            if G.conj(h, g) not in N:
                raise NotNormal(g, h)
    mul = G.mul
    coset_rep: dict[int, int] = {}
    reps: list[int] = []
    for g in range(G.order):
        if g in coset_rep:
            continue
        coset = sorted(mul[g][x] for x in N.elements)
        rep = coset[0]
        reps.append(rep)
        for y in coset:
            coset_rep[y] = rep
    reps.sort()
    index = {rep: i for i, rep in enumerate(reps)}
    table = [[index[coset_rep[mul[a][b]]] for b in reps] for a in reps]
    Q = Group(table, name=(f"{G.name}/N" if G.name else None))
    pi = GroupHom(G, Q, [index[coset_rep[g]] for g in range(G.order)])
    return Q, pi


def are_conjugate_subgroups(G: Group, H: Subgroup, K: Subgroup) -> int | None:
    """Least g with H^g = K, or None if the subgroups are not conjugate."""
    if H.parent is not G or K.parent is not G:
        raise ValueError("subgroups must share the given parent group")
    if H.order != K.order:
        return None
    target = K._set
    for g in range(G.order):
        if all(G.conj(h, g) in target for h in H.elements):
            return g
    return None
