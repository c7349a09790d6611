"""Small catalog groups realized as permutation groups, by brute force.

Permutations are tuples ``p`` with ``p[i]`` the image of point ``i``;
products compose right to left, ``(p * q)[i] == p[q[i]]``.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations, product
from math import factorial, gcd
from typing import Iterable, Union

Perm = tuple[int, ...]


class GroupError(ValueError):
    pass


class RecognitionError(GroupError):
    pass


# -- specs ------------------------------------------------------------------

@dataclass(frozen=True)
class Cyclic:
    n: int

    def __str__(self):
        return f"Z{self.n}"


@dataclass(frozen=True)
class Dihedral:
    order: int = 8

    def __str__(self):
        return f"D{self.order}"


@dataclass(frozen=True)
class Symmetric:
    n: int

    def __str__(self):
        return f"S{self.n}"


@dataclass(frozen=True)
class Product:
    left: "GroupSpec"
    right: "GroupSpec"

    def __str__(self):
        return f"{self.left}x{self.right}"


GroupSpec = Union[Cyclic, Dihedral, Symmetric, Product]


def spec_order(spec: GroupSpec) -> int:
    if isinstance(spec, Cyclic):
        return spec.n
    if isinstance(spec, Dihedral):
        return spec.order
    if isinstance(spec, Symmetric):
        return factorial(spec.n)
    return spec_order(spec.left) * spec_order(spec.right)


def _depth(spec: GroupSpec) -> int:
    if isinstance(spec, Product):
        return 1 + max(_depth(spec.left), _depth(spec.right))
    return 0


def validate_spec(spec: GroupSpec) -> None:
    if isinstance(spec, Cyclic):
        ok = 1 <= spec.n <= 60
    elif isinstance(spec, Dihedral):
        ok = spec.order == 8
    elif isinstance(spec, Symmetric):
        ok = 1 <= spec.n <= 6
    elif isinstance(spec, Product):
        validate_spec(spec.left)
        validate_spec(spec.right)
        ok = _depth(spec) <= 2
    else:
        raise GroupError(f"not a group spec: {spec!r}")
    if not ok or spec_order(spec) > 720:
        raise GroupError(f"{spec} is outside the catalog")


_ATOM = re.compile(r"^(Z|S|D)(\d+)$")


def parse_group(name: str) -> GroupSpec:
    """Parse names such as ``Z4``, ``D8``, ``S3xZ2`` (left-associative)."""
    parts = name.strip().split("x")
    specs = []
    for part in parts:
        m = _ATOM.match(part)
        if not m:
            raise GroupError(f"unknown group name {name!r}")
        kind, n = m.group(1), int(m.group(2))
        specs.append({"Z": Cyclic, "S": Symmetric, "D": Dihedral}[kind](n))
    spec = specs[0]
    for s in specs[1:]:
        spec = Product(spec, s)
    validate_spec(spec)
    return spec


# -- permutations -----------------------------------------------------------

def compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Perm) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def perm_order(p: Perm) -> int:
    o = 1
    for c in cycles(p):
        o = o * len(c) // gcd(o, len(c))
    return o


def cycle_notation(p: Perm) -> str:
    nontrivial = [c for c in cycles(p) if len(c) > 1]
    if not nontrivial:
        return "e"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)


def parse_cycles(text: str, degree: int) -> Perm:
    text = text.strip()
    img = list(range(degree))
    if text == "e":
        return tuple(img)
    if not re.fullmatch(r"(\(\d+( \d+)+\))+", text):
        raise GroupError(f"bad cycle notation {text!r}")
    for body in re.findall(r"\(([^)]*)\)", text):
        pts = [int(t) for t in body.split()]
        if any(not 0 <= x < degree for x in pts) or len(set(pts)) != len(pts):
            raise GroupError(f"bad cycle {body!r} on {degree} points")
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a] = b
    return tuple(img)


# -- groups -----------------------------------------------------------------

def _closure(gens: Iterable[Perm], degree: int) -> frozenset[Perm]:
    ident = tuple(range(degree))
    gens = list(gens)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = compose(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return frozenset(seen)


def spec_degree(spec: GroupSpec) -> int:
    if isinstance(spec, Cyclic):
        return spec.n
    if isinstance(spec, Dihedral):
        return 4
    if isinstance(spec, Symmetric):
        return spec.n
    return spec_degree(spec.left) + spec_degree(spec.right)


def _embed(p: Perm, offset: int, degree: int, left: bool) -> Perm:
    if left:
        return tuple(p) + tuple(range(len(p), degree))
    return tuple(range(offset)) + tuple(offset + i for i in p)


def spec_generators(spec: GroupSpec) -> list[Perm]:
    if isinstance(spec, Cyclic):
        return [tuple((i + 1) % spec.n for i in range(spec.n))]
    if isinstance(spec, Dihedral):
        # rotation i -> i+1 and reflection i -> -i of a square
        return [(1, 2, 3, 0), (0, 3, 2, 1)]
    if isinstance(spec, Symmetric):
        n = spec.n
        if n == 1:
            return [(0,)]
        cyc = tuple((i + 1) % n for i in range(n))
        swap = (1, 0) + tuple(range(2, n))
        return [cyc, swap]
    dl, dr = spec_degree(spec.left), spec_degree(spec.right)
    deg = dl + dr
    return ([_embed(g, dl, deg, True) for g in spec_generators(spec.left)]
            + [_embed(g, dl, deg, False) for g in spec_generators(spec.right)])


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite permutation group; ``spec`` is None for ad hoc subgroups."""

    elements: tuple[Perm, ...]
    degree: int
    spec: GroupSpec | None = None
    generators: tuple[Perm, ...] = ()

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Perm:
        return tuple(range(self.degree))

    @cached_property
    def element_set(self) -> frozenset[Perm]:
        return frozenset(self.elements)

    def __contains__(self, g) -> bool:
        return g in self.element_set

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generators or self.elements
        return all(compose(a, b) == compose(b, a) for a in gens for b in gens)

    def __repr__(self):
        label = self.spec if self.spec is not None else "?"
        return f"FiniteGroup({label}, order={self.order})"


@lru_cache(maxsize=None)
def build_group(spec: GroupSpec) -> FiniteGroup:
    validate_spec(spec)
    deg = spec_degree(spec)
    gens = spec_generators(spec)
    elems = tuple(sorted(_closure(gens, deg)))
    if len(elems) != spec_order(spec):
        raise GroupError(f"realization of {spec} has {len(elems)} elements")
    return FiniteGroup(elems, deg, spec, tuple(gens))


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Perm
    members: frozenset[Perm]

    @property
    def size(self) -> int:
        return len(self.members)


@lru_cache(maxsize=None)
def _classes(G: FiniteGroup) -> tuple[ConjugacyClass, ...]:
    gens = G.generators or G.elements
    left = set(G.elements)
    out = []
    for g in G.elements:  # sorted, so the first hit is the least member
        if g not in left:
            continue
        orbit, frontier = {g}, [g]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = compose(compose(s, x), inverse(s))
                    if y not in orbit:
                        orbit.add(y)
                        nxt.append(y)
            frontier = nxt
        left -= orbit
        out.append(ConjugacyClass(g, frozenset(orbit)))
    return tuple(out)


def conjugacy_classes(G: FiniteGroup) -> list[ConjugacyClass]:
    """Conjugation orbits ordered by their least element."""
    return list(_classes(G))


def class_of(G: FiniteGroup, g: Perm) -> int:
    for i, c in enumerate(_classes(G)):
        if g in c.members:
            return i
    raise GroupError(f"{cycle_notation(g)} is not in {G}")


def center(G: FiniteGroup) -> frozenset[Perm]:
    gens = G.generators or G.elements
    return frozenset(z for z in G.elements
                     if all(compose(z, s) == compose(s, z) for s in gens))


def centralizer(G: FiniteGroup, g: Perm) -> FiniteGroup:
    if g not in G:
        raise GroupError(f"{cycle_notation(g)} is not in {G}")
    elems = tuple(h for h in G.elements if compose(h, g) == compose(g, h))
    if len(elems) == G.order:
        return G
    return FiniteGroup(elems, G.degree)


def element_order(g: Perm) -> int:
    return perm_order(g)


# -- recognition ------------------------------------------------------------

def _catalog() -> list[GroupSpec]:
    z = Cyclic
    cat: list[GroupSpec] = [z(n) for n in range(1, 61)]
    cat += [Dihedral(8), Symmetric(3), Symmetric(4), Symmetric(5)]
    cat += [
        Product(z(2), z(2)),
        Product(z(2), z(4)),
        Product(z(2), z(6)),
        Product(z(3), z(3)),
        Product(Product(z(2), z(2)), z(2)),
        Product(Symmetric(3), z(2)),
        Product(Symmetric(3), z(3)),
        Product(Dihedral(8), z(2)),
        Product(Symmetric(4), z(2)),
    ]
    return cat


CATALOG: tuple[GroupSpec, ...] = tuple(_catalog())


def fingerprint(G: FiniteGroup) -> tuple:
    orders = Counter(perm_order(g) for g in G.elements)
    return (G.order, G.is_abelian, len(center(G)), tuple(sorted(orders.items())))


@lru_cache(maxsize=None)
def _catalog_index() -> dict[tuple, list[GroupSpec]]:
    index: dict[tuple, list[GroupSpec]] = {}
    for spec in CATALOG:
        index.setdefault(fingerprint(build_group(spec)), []).append(spec)
    return index


def recognize(H: FiniteGroup) -> GroupSpec:
    """Catalog label of H, matched by fingerprint."""
    if H.order > 120:
        raise RecognitionError(f"order {H.order} exceeds the recognition bound")
    hits = _catalog_index().get(fingerprint(H), [])
    if not hits:
        raise RecognitionError(f"unrecognized group of order {H.order}")
    if len(hits) > 1:
        raise RecognitionError(f"ambiguous fingerprint: {', '.join(map(str, hits))}")
    return hits[0]


def isomorphism(H: FiniteGroup, spec: GroupSpec) -> dict[Perm, Perm]:
    """An explicit isomorphism from H onto build_group(spec).

    Searches images of the catalog generators inside H; the first
    assignment that extends to a bijective homomorphism wins, so the result
    is deterministic.
    """
    K = build_group(spec)
    if K.order != H.order:
        raise GroupError(f"{H} and {spec} have different orders")
    gens = list(K.generators)
    hz = center(H)
    kz = center(K)
    pools = []
    for s in gens:
        o = perm_order(s)
        pool = [h for h in H.elements if perm_order(h) == o]
        if s in kz:
            pool = [h for h in pool if h in hz]
        pools.append(pool)
    for images in product(*pools):
        fwd = _extend(K, gens, images, H.degree)
        if fwd is not None:
            return {h: k for k, h in fwd.items()}
    raise GroupError(f"{H} is not isomorphic to {spec}")


def _extend(K: FiniteGroup, gens: list[Perm], images: tuple[Perm, ...],
            hdeg: int) -> dict[Perm, Perm] | None:
    fwd = {K.identity: tuple(range(hdeg))}
    frontier = [K.identity]
    while frontier:
        nxt = []
        for k in frontier:
            for s, t in zip(gens, images):
                k2 = compose(k, s)
                h2 = compose(fwd[k], t)
                if k2 in fwd:
                    if fwd[k2] != h2:
                        return None
                else:
                    fwd[k2] = h2
                    nxt.append(k2)
        frontier = nxt
    if len(fwd) != K.order or len(set(fwd.values())) != K.order:
        return None
    return fwd


def spec_components(spec: GroupSpec, g: Perm) -> tuple[Perm, Perm]:
    """Split an element of a Product realization into its two factors."""
    if not isinstance(spec, Product):
        raise GroupError(f"{spec} is not a product")
    dl = spec_degree(spec.left)
    return tuple(g[:dl]), tuple(i - dl for i in g[dl:])


def all_permutations(n: int) -> list[Perm]:
    return sorted(permutations(range(n)))
