"""Actions of one finite group on another by automorphisms, the induced
semidirect product, and finite G-sets.

Left-action convention throughout: act(j, n) applies the automorphism of j to
n, and the semidirect multiplication is (n1, j1)(n2, j2) = (n1 * act(j1, n2),
j1 j2).  The single source of truth tying this to conjugation is the checked
identity  embed_J(j)' embed_N(n) embed_J(j) = embed_N(act(j', n)).
"""

from __future__ import annotations

from typing import Sequence

from .errors import (
    DoesNotGenerate,
    NotAHomomorphism,
    NotAutomorphism,
    NotNormalized,
    OrderCapExceeded,
)
from .groups import DEFAULT_ORDER_CAP, Group, GroupHom, Subgroup

DEFAULT_GSET_CAP = 4096


def is_automorphism(N: Group, perm: Sequence[int]) -> bool:
    if len(perm) != N.order or sorted(perm) != list(range(N.order)):
        return False
    if perm[0] != 0:
        return False
    mul = N.mul
    return all(
        perm[mul[a][b]] == mul[perm[a]][perm[b]]
        for a in range(N.order)
        for b in range(N.order)
    )


class ActionOnGroup:
    """A homomorphism from J into Aut(N), one permutation of N per J-element."""

    __slots__ = ("actor", "target", "auto", "name", "_h1_cache")

    def __init__(self, actor: Group, target: Group, auto: Sequence[Sequence[int]],
                 name: str | None = None):
        perms = tuple(tuple(int(x) for x in p) for p in auto)
        if len(perms) != actor.order:
            raise ValueError("need one permutation of N per element of J")
        for j, perm in enumerate(perms):
            if not is_automorphism(target, perm):
                raise NotAutomorphism(f"image of element {j} is not an automorphism")
        ident = tuple(range(target.order))
        if perms[0] != ident:
            raise NotAHomomorphism("identity of J must act as the identity map")
        mul = actor.mul
        for a in range(actor.order):
            pa = perms[a]
            for b in range(actor.order):
                pb = perms[b]
                pab = perms[mul[a][b]]
                if any(pab[n] != pa[pb[n]] for n in range(target.order)):
                    raise NotAHomomorphism(
                        f"action of product {a}*{b} differs from composed action"
                    )
        self.actor = actor
        self.target = target
        self.auto = perms
        self.name = name
        self._h1_cache: dict = {}

    def act(self, j: int, n: int) -> int:
        return self.auto[j][n]

    def is_trivial(self) -> bool:
        ident = tuple(range(self.target.order))
        return all(p == ident for p in self.auto)

    def __repr__(self) -> str:
        tag = self.name or "action"
        return f"<{tag}: |J|={self.actor.order} on |N|={self.target.order}>"


def trivial_action(J: Group, N: Group, name: str | None = None) -> ActionOnGroup:
    ident = tuple(range(N.order))
    return ActionOnGroup(J, N, [ident] * J.order, name=name or "trivial")


def action_from_generator_images(
    J: Group,
    N: Group,
    gens: Sequence[int],
    images: Sequence[Sequence[int]],
    name: str | None = None,
) -> ActionOnGroup:
    """Extend generator images to the unique action homomorphism, if one exists.

    The extension is propagated along J's Cayley graph; if two paths to the
    same element disagree, the images are inconsistent with J's relations.
    """
    if len(gens) != len(images):
        raise ValueError("need exactly one image per generator")
    for img in images:
        if not is_automorphism(N, img):
            raise NotAutomorphism(f"{list(img)} is not an automorphism of the target")
    gens = [int(g) for g in gens]
    ident = tuple(range(N.order))
    auto: dict[int, tuple[int, ...]] = {0: ident}
    frontier = [0]
    gen_perms = [tuple(int(x) for x in img) for img in images]
    while frontier:
        nxt = []
        for j in frontier:
            pj = auto[j]
            for g, pg in zip(gens, gen_perms):
                k = J.mul[j][g]
                pk = tuple(pj[pg[n]] for n in range(N.order))
                if k in auto:
                    if auto[k] != pk:
                        raise NotAHomomorphism(
                            f"images are inconsistent with relations at element {k}"
                        )
                else:
                    auto[k] = pk
                    nxt.append(k)
        frontier = nxt
    if len(auto) != J.order:
        raise DoesNotGenerate(f"generators reach only {len(auto)} of {J.order} elements")
    return ActionOnGroup(J, N, [auto[j] for j in range(J.order)], name=name)


def conjugation_action(G: Group, N: Subgroup, J: Subgroup,
                       name: str | None = None) -> ActionOnGroup:
    """Action of J on N by conjugation inside G; J must normalize N."""
    action, _, _ = conjugation_action_with_maps(G, N, J, name=name)
    return action


def conjugation_action_with_maps(
    G: Group, N: Subgroup, J: Subgroup, name: str | None = None
) -> tuple[ActionOnGroup, tuple[int, ...], tuple[int, ...]]:
    """conjugation_action plus the element maps of actor and target into G."""
    for j in J.elements:
        for n in N.elements:
            if G.mul[G.mul[j][n]][G.inv[j]] not in N:
                raise NotNormalized(f"element {j} does not normalize the target")
    Jg, j_map = J.as_group()
    Ng, n_map = N.as_group()
    n_pos = {x: i for i, x in enumerate(n_map)}
    auto = [
        [n_pos[G.mul[G.mul[j][n]][G.inv[j]]] for n in n_map]
        for j in j_map
    ]
    return ActionOnGroup(Jg, Ng, auto, name=name), j_map, n_map


class SemidirectProduct:
    """The group N x| J for an action, with its embeddings and projection.

    Element (n, j) has index n * |J| + j, so the identity is index 0.
    """

    __slots__ = ("action", "group", "embed_N", "embed_J", "project_J")

    def __init__(self, action: ActionOnGroup, order_cap: int = DEFAULT_ORDER_CAP):
        N, J = action.target, action.actor
        size = N.order * J.order
        if size > order_cap:
            raise OrderCapExceeded(f"|N x| J| = {size} exceeds cap {order_cap}")
        nj = J.order
        table = [[0] * size for _ in range(size)]
        for n1 in range(N.order):
            for j1 in range(J.order):
                row = table[n1 * nj + j1]
                a1 = action.auto[j1]
                for n2 in range(N.order):
                    m = N.mul[n1][a1[n2]] * nj
                    jrow = J.mul[j1]
                    base = n2 * nj
                    for j2 in range(J.order):
                        row[base + j2] = m + jrow[j2]
        names = None
        if N.element_names or J.element_names:
            names = [
                f"({N.label(n)},{J.label(j)})"
                for n in range(N.order)
                for j in range(J.order)
            ]
        group = Group(table, name="semidirect", element_names=names)
        self.action = action
        self.group = group
        self.embed_N = GroupHom(N, group, [n * nj for n in range(N.order)])
        self.embed_J = GroupHom(J, group, list(range(nj)))
        self.project_J = GroupHom(group, J, [g % nj for g in range(size)])
        self._check_conjugation_realizes_action()

    def _check_conjugation_realizes_action(self) -> None:
        G = self.group
        for j in range(self.action.actor.order):
            ej = self.embed_J(j)
            inv_auto = self.action.auto[self.action.actor.inv[j]]
            for n in range(self.action.target.order):
                lhs = G.mul[G.mul[G.inv[ej]][self.embed_N(n)]][ej]
                if lhs != self.embed_N(inv_auto[n]):
                    raise NotAHomomorphism(
                        "conjugation in the semidirect product does not realize the action"
                    )

    def n_part(self) -> Subgroup:
        return self.embed_N.image()

    def j_part(self) -> Subgroup:
        return self.embed_J.image()

    def pair(self, g: int) -> tuple[int, int]:
        return divmod(g, self.action.actor.order)


def semidirect(action: ActionOnGroup, order_cap: int = DEFAULT_ORDER_CAP) -> SemidirectProduct:
    return SemidirectProduct(action, order_cap=order_cap)


class GSet:
    """A finite set with a G-action, stored as one point permutation per element."""

    __slots__ = ("group", "size", "act")

    def __init__(self, group: Group, act: Sequence[Sequence[int]],
                 size_cap: int = DEFAULT_GSET_CAP):
        tables = tuple(tuple(int(x) for x in row) for row in act)
        if len(tables) != group.order:
            raise ValueError("need one point permutation per group element")
        size = len(tables[0]) if tables else 0
        if size > size_cap:
            raise OrderCapExceeded(f"G-set size {size} exceeds cap {size_cap}")
        pts = list(range(size))
        for g, row in enumerate(tables):
            if len(row) != size or sorted(row) != pts:
                raise ValueError(f"element {g} does not act by a permutation")
        if tables and tables[0] != tuple(pts):
            raise ValueError("identity must act trivially")
        mul = group.mul
        for a in range(group.order):
            ta = tables[a]
            for b in range(group.order):
                tb = tables[b]
                tab = tables[mul[a][b]]
                if any(tab[w] != ta[tb[w]] for w in range(size)):
                    raise ValueError(f"action is not a homomorphism at ({a}, {b})")
        self.group = group
        self.size = size
        self.act = tables

    def apply(self, g: int, point: int) -> int:
        return self.act[g][point]

    def orbit(self, point: int, S: Subgroup | None = None) -> set[int]:
        movers = S.elements if S is not None else range(self.group.order)
        seen = {point}
        frontier = [point]
        while frontier:
            nxt = []
            for w in frontier:
                for g in movers:
                    v = self.act[g][w]
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
        return seen


def coset_gset(G: Group, H: Subgroup) -> GSet:
    """Left multiplication on the left cosets of H; point 0 is the coset H."""
    mul = G.mul
    rep_of: dict[int, int] = {}
    reps: list[int] = []
    for g in range(G.order):
        if g in rep_of:
            continue
        coset = sorted(mul[g][h] for h in H.elements)
        rep = coset[0]
        reps.append(rep)
        for y in coset:
            rep_of[y] = rep
    reps.sort()
    index = {rep: i for i, rep in enumerate(reps)}
    act = [[index[rep_of[mul[g][r]]] for r in reps] for g in range(G.order)]
    return GSet(G, act)


def is_transitive(gset: GSet, S: Subgroup) -> bool:
    """Whether S has a single orbit on the points."""
    if gset.size == 0:
        return False
    return len(gset.orbit(0, S)) == gset.size


def fixed_points(gset: GSet, S: Subgroup) -> list[int]:
    return [
        w for w in range(gset.size) if all(gset.act[s][w] == w for s in S.elements)
    ]


def stabilizer(gset: GSet, point: int) -> Subgroup:
    if not 0 <= point < gset.size:
        raise ValueError(f"point {point} outside G-set of size {gset.size}")
    return Subgroup(
        gset.group,
        (g for g in range(gset.group.order) if gset.act[g][point] == point),
    )
