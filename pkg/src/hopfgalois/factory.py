"""Group families, automorphism groups, holomorphs, and the order catalog.

GroupSpec is the abstract recipe; ``build`` turns a recipe into a faithful
PermGroup acting on its natural carrier.  ``catalog`` enumerates one group
per isomorphism class for squarefree orders (complete by Burnside: such
groups are exactly semidirect products of coprime cyclic groups) plus a
hard-coded exception table for a few non-squarefree orders the audits and
cross-checks need.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from . import perm
from .errors import (
    PreconditionError,
    SpecSemanticError,
    UnsupportedOrderError,
)
from .groups import (
    PermGroup,
    TABLE_LIMIT,
    are_isomorphic,
    bfs_order,
    closure,
    is_cyclic,
    is_c_group,
    is_normal,
    all_subgroups,
    left_translation,
    unique_odd_part,
)

# Group specs.


@dataclass(frozen=True)
class Cyclic:
    n: int

    def text(self):
        return f"C{self.n}"

    def order(self):
        return self.n


@dataclass(frozen=True)
class Dihedral:
    """Dihedral group of total order 2n (the ``order`` field)."""

    order2n: int

    def text(self):
        return f"D{self.order2n}"

    def order(self):
        return self.order2n


@dataclass(frozen=True)
class SemidirectCC:
    """Z_k x| Z_l with the Z_l generator acting as x -> t*x mod k."""

    k: int
    l: int
    t: int

    def text(self):
        return f"SD({self.k},{self.l};{self.t})"

    def order(self):
        return self.k * self.l


@dataclass(frozen=True)
class SemidirectZ2:
    """Z_n x| Z_2 with the involution acting as x -> s*x mod n."""

    n: int
    s: int

    def text(self):
        return f"SDZ2({self.n};{self.s})"

    def order(self):
        return 2 * self.n


@dataclass(frozen=True)
class DirectProduct:
    left: "GroupSpec"
    right: "GroupSpec"

    def text(self):
        return f"{self.left.text()}x{self.right.text()}"

    def order(self):
        return self.left.order() * self.right.order()


@dataclass(frozen=True)
class Holomorph:
    inner: "GroupSpec"

    def text(self):
        return f"Hol({self.inner.text()})"

    def order(self):
        raise PreconditionError("holomorph order depends on Aut; build it")


@dataclass(frozen=True)
class Alternating4:
    def text(self):
        return "A4"

    def order(self):
        return 12


GroupSpec = (
    Cyclic | Dihedral | SemidirectCC | SemidirectZ2 | DirectProduct | Holomorph | Alternating4
)


def validate_spec(spec: GroupSpec):
    """Raise SpecSemanticError when a recipe carries invalid parameters."""
    if isinstance(spec, Cyclic):
        if spec.n < 1:
            raise SpecSemanticError(f"C{spec.n}: order must be positive")
    elif isinstance(spec, Dihedral):
        if spec.order2n < 2 or spec.order2n % 2:
            raise SpecSemanticError(f"D{spec.order2n}: order must be even and >= 2")
    elif isinstance(spec, SemidirectCC):
        k, l, t = spec.k, spec.l, spec.t
        if k < 1 or l < 1:
            raise SpecSemanticError(f"{spec.text()}: factors must be positive")
        if gcd(k, l) != 1:
            raise SpecSemanticError(f"{spec.text()}: gcd({k},{l}) != 1")
        if t < 1 or t > k or gcd(t % k if k > 1 else 1, k) != 1:
            raise SpecSemanticError(f"{spec.text()}: twist {t} is not a unit mod {k}")
        if pow(t, l, k) != 1 % k:
            raise SpecSemanticError(
                f"{spec.text()}: twist order does not divide {l} ({t}^{l} != 1 mod {k})"
            )
    elif isinstance(spec, SemidirectZ2):
        n, s = spec.n, spec.s
        if n < 1:
            raise SpecSemanticError(f"{spec.text()}: n must be positive")
        if s < 1 or s > n or gcd(s % n if n > 1 else 1, n) != 1:
            raise SpecSemanticError(f"{spec.text()}: twist {s} is not a unit mod {n}")
        if (s * s) % n != 1 % n:
            raise SpecSemanticError(f"{spec.text()}: {s}^2 != 1 mod {n}")
    elif isinstance(spec, DirectProduct):
        validate_spec(spec.left)
        validate_spec(spec.right)
    elif isinstance(spec, Holomorph):
        validate_spec(spec.inner)
    elif isinstance(spec, Alternating4):
        pass
    else:
        raise SpecSemanticError(f"unknown spec {spec!r}")


def z2_twists(n: int) -> list[int]:
    """All valid SemidirectZ2 twists for Z_n: units s with s^2 = 1 mod n."""
    return [
        s
        for s in range(1, n + 1)
        if gcd(s % n if n > 1 else 1, n) == 1 and (s * s) % n == 1 % n
    ]


_BUILD_CACHE: dict = {}


def build(spec: GroupSpec) -> PermGroup:
    """Materialize a recipe as a faithful permutation group."""
    if spec in _BUILD_CACHE:
        return _BUILD_CACHE[spec]
    validate_spec(spec)
    G = _build(spec)
    _BUILD_CACHE[spec] = G
    return G


def _build(spec: GroupSpec) -> PermGroup:
    if isinstance(spec, Cyclic):
        n = spec.n
        gen = tuple((x + 1) % n for x in range(n))
        return closure([gen], cap=n, label=spec)
    if isinstance(spec, Dihedral):
        n = spec.order2n // 2
        return _semidirect_pair(n, 2, (n - 1) % n if n > 1 else 1, spec)
    if isinstance(spec, SemidirectCC):
        return _semidirect_pair(spec.k, spec.l, spec.t, spec)
    if isinstance(spec, SemidirectZ2):
        return _semidirect_pair(spec.n, 2, spec.s, spec)
    if isinstance(spec, DirectProduct):
        A, B = build(spec.left), build(spec.right)
        da, db = A.degree, B.degree
        gens = [
            tuple(p[i // db] * db + i % db for i in range(da * db))
            for p in A.generators
        ] + [
            tuple((i // db) * db + q[i % db] for i in range(da * db))
            for q in B.generators
        ]
        if not gens:
            gens = [perm.identity(da * db)]
        return closure(gens, cap=len(A) * len(B), label=spec)
    if isinstance(spec, Holomorph):
        return holomorph(build(spec.inner)).group
    if isinstance(spec, Alternating4):
        return closure([(1, 2, 0, 3), (1, 0, 3, 2)], cap=12, label=spec)
    raise SpecSemanticError(f"unknown spec {spec!r}")  # pragma: no cover


def _semidirect_pair(k: int, l: int, t: int, spec) -> PermGroup:
    """Left regular action of Z_k x| Z_l on its kl-point carrier.

    Point (c, d) is index c*l + d; element (a, b) sends it to
    (a + t^b * c, b + d).
    """
    size = k * l
    gens = []
    if k > 1:
        gens.append(tuple(((c + 1) % k) * l + d for c in range(k) for d in range(l)))
    if l > 1:
        gens.append(
            tuple(((t * c) % k) * l + (d + 1) % l for c in range(k) for d in range(l))
        )
    if not gens:
        gens = [perm.identity(size)]
    return closure(gens, cap=size, label=spec)


# Automorphism groups and holomorphs.


def automorphism_group(N: PermGroup, max_generators=3, cache=None) -> PermGroup:
    """All automorphisms of N, as permutations of N's element indices.

    Generator-image search over order-matched candidates; every candidate
    map is verified multiplicative and bijective, so the returned list is
    the complete automorphism group.  ``cache`` may be a dict-like object
    keyed by canonical spec text (only labeled groups are cached).
    """
    cached = getattr(N, "_aut_group", None)
    if cached is not None:
        return cached
    key = N.label.text() if N.label is not None else None
    if cache is not None and key is not None:
        hit = cache.get(key)
        if hit is not None:
            aut = PermGroup(len(N), [tuple(p) for p in hit])
            N._aut_group = aut
            return aut
    aut_perms = _automorphism_perms(N, max_generators)
    aut = PermGroup(len(N), aut_perms)
    N._aut_group = aut
    if cache is not None and key is not None:
        cache.put(key, [list(p) for p in aut.elements])
    return aut


def _automorphism_perms(N: PermGroup, max_generators):
    gens = N.minimal_generating_set()
    if len(gens) > max_generators:
        raise PreconditionError(
            f"needs {len(gens)} generators, bound is {max_generators}"
        )
    gen_idxs = [N.index_of(g) for g in gens]
    order, parent = bfs_order(N, gen_idxs)
    if len(N) <= TABLE_LIMIT:
        N.table()
    cands = [
        [j for j in range(len(N)) if N.order_of(j) == N.order_of(gi)]
        for gi in gen_idxs
    ]
    n = len(N)
    e = N.identity_index
    mul = N.mul
    out = []
    for choice in itertools.product(*cands):
        images = [None] * n
        images[e] = e
        for i in order[1:]:
            prev, pos = parent[i]
            images[i] = mul(images[prev], choice[pos])
        if len(set(images)) != n:
            continue
        ok = True
        for x in range(n):
            ix = images[x]
            for pos, g in enumerate(gen_idxs):
                if images[mul(x, g)] != mul(ix, choice[pos]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(tuple(images))
    return out


@dataclass
class HolomorphGroup:
    """Hol(N) on N's element indices, with tagged embeddings.

    ``lam[t]`` is the left translation by element t, ``iota[a]`` the
    automorphism with index a, and ``tags`` recovers the (translation,
    automorphism) pair of any holomorph element.
    """

    group: PermGroup
    n_group: PermGroup
    aut: PermGroup
    lam: tuple
    iota: tuple
    tags: dict

    @property
    def identity_point(self) -> int:
        return self.n_group.identity_index


def holomorph(N: PermGroup, cache=None) -> HolomorphGroup:
    """The permutations of N generated by translations and automorphisms."""
    cached = getattr(N, "_holomorph", None)
    if cached is not None:
        return cached
    aut = automorphism_group(N, cache=cache)
    n = len(N)
    lam = tuple(left_translation(N, t) for t in range(n))
    tags = {}
    elements = []
    for t in range(n):
        lam_t = lam[t]
        for a, alpha in enumerate(aut.elements):
            h = perm.compose(lam_t, alpha)
            if h in tags:
                raise PreconditionError("holomorph pair collision")  # pragma: no cover
            tags[h] = (t, a)
            elements.append(h)
    gens = [lam[N.index_of(g)] for g in N.minimal_generating_set()]
    gens += list(aut.minimal_generating_set())
    label = Holomorph(N.label) if N.label is not None else None
    group = PermGroup(n, elements, generators=gens, label=label)
    iota = tuple(aut.elements)
    hol = HolomorphGroup(group, N, aut, lam, iota, tags)
    N._holomorph = hol
    return hol


# The small-order catalog.


@dataclass(frozen=True)
class CatalogEntry:
    spec: GroupSpec
    group: PermGroup


_EXCEPTION_ORDERS = {
    4: (Cyclic(4), DirectProduct(Cyclic(2), Cyclic(2))),
    12: (
        Cyclic(12),
        DirectProduct(Cyclic(2), Cyclic(6)),
        Dihedral(12),
        SemidirectCC(3, 4, 2),
        Alternating4(),
    ),
}

_CATALOG_CACHE: dict = {}


def is_squarefree(n: int) -> bool:
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        if n % p == 0:
            n //= p
        p += 1
    return True


def catalog(order: int) -> list[CatalogEntry]:
    """One entry per isomorphism class of groups of the given order.

    Complete for squarefree orders and for the hard-coded exception
    orders; anything else raises UnsupportedOrderError.
    """
    if order in _CATALOG_CACHE:
        return list(_CATALOG_CACHE[order])
    if order < 1:
        raise UnsupportedOrderError(f"order {order} is not positive")
    if order in _EXCEPTION_ORDERS:
        entries = [CatalogEntry(s, build(s)) for s in _EXCEPTION_ORDERS[order]]
        _CATALOG_CACHE[order] = entries
        return list(entries)
    if not is_squarefree(order):
        raise UnsupportedOrderError(
            f"order {order} is not squarefree and has no exception entry"
        )
    classes: list[tuple[GroupSpec, PermGroup]] = []
    for k in sorted(d for d in range(1, order + 1) if order % d == 0):
        l = order // k
        if gcd(k, l) != 1:
            continue
        for t in range(1, k + 1):
            if gcd(t % k if k > 1 else 1, k) != 1 or pow(t, l, k) != 1 % k:
                continue
            spec = SemidirectCC(k, l, t)
            G = build(spec)
            placed = False
            for i, (espec, EG) in enumerate(classes):
                if are_isomorphic(EG, G) is not None:
                    if G.elements < EG.elements:
                        classes[i] = (spec, G)
                    placed = True
                    break
            if not placed:
                classes.append((spec, G))
    classes.sort(key=lambda sg: sg[1].elements)
    entries = []
    for s, G in classes:
        pretty = _prettify(s)
        entries.append(CatalogEntry(pretty, _relabel(G, pretty)))
    _CATALOG_CACHE[order] = entries
    return list(entries)


def _prettify(spec: GroupSpec) -> GroupSpec:
    """Friendlier tags for recognized families; the group is unchanged."""
    if isinstance(spec, SemidirectCC):
        k, l, t = spec.k, spec.l, spec.t
        if k == 1:
            return Cyclic(l)
        if l == 1:
            return Cyclic(k)
        if t == 1:
            return Cyclic(k * l)
        if l == 2 and t == k - 1:
            return Dihedral(2 * k)
    return spec


def _relabel(G: PermGroup, spec: GroupSpec) -> PermGroup:
    if G.label == spec:
        return G
    H = PermGroup(G.degree, G.elements, generators=G.generators, label=spec)
    return H


def class_index(G: PermGroup, entries: list[CatalogEntry]) -> int:
    """Index of the catalog class isomorphic to G; raises if none matches."""
    for i, entry in enumerate(entries):
        if are_isomorphic(entry.group, G) is not None:
            return i
    raise PreconditionError(
        f"group of order {len(G)} matches no catalog class"
    )


# Structure recognition.


def decompose_burnside(G: PermGroup):
    """Coprime cyclic semidirect parameters (k, l, t) for a C-group.

    Returns None when some Sylow subgroup is non-cyclic.  Cyclic groups
    canonically decompose as (|G|, 1, 1); otherwise the decomposition with
    the largest normal cyclic factor k (then least twist) is returned.
    """
    if len(G) == 1:
        return (1, 1, 1)
    if not is_c_group(G):
        return None
    if is_cyclic(G):
        return (len(G), 1, 1)
    subs = all_subgroups(G)
    n = len(G)
    candidates = []
    for K in subs:
        k = len(K)
        if k == 1 or n % k or gcd(k, n // k) != 1 or not is_cyclic(K):
            continue
        if not is_normal(G, K):
            continue
        k_idxs = frozenset(G.index_of(p) for p in K.elements)
        l = n // k
        for L in subs:
            if len(L) != l or not is_cyclic(L):
                continue
            l_idxs = frozenset(G.index_of(p) for p in L.elements)
            if len(k_idxs & l_idxs) != 1:
                continue
            t = _conjugation_exponent(G, k_idxs, l_idxs, k, l)
            candidates.append((k, l, t))
            break
    if not candidates:
        return None  # pragma: no cover (C-groups always decompose)
    candidates.sort(key=lambda c: (-c[0], c[2]))
    return candidates[0]


def _conjugation_exponent(G, k_idxs, l_idxs, k, l):
    """The exponent t with v u v^-1 = u^t for generators u of K, v of L."""
    u = min(i for i in k_idxs if G.order_of(i) == k)
    if l == 1:
        return 1
    v = min(i for i in l_idxs if G.order_of(i) == l)
    w = G.mul(G.mul(v, u), G.inv(v))
    power = u
    t = 1
    while power != w:
        power = G.mul(power, u)
        t += 1
        if t > k:
            raise PreconditionError("conjugate left the cyclic factor")  # pragma: no cover
    return t


@dataclass(frozen=True)
class ShapeWitness:
    """Witness that a group of order 2n splits as (Z_k x| Z_l) x| Z_2."""

    k: int
    l: int
    t: int
    odd_part: PermGroup


def shape_check_semidirect_z2(N: PermGroup):
    """Decomposition witness (k, l, t) when N's odd part is a C-group.

    For |N| = 2n with n odd, the order-n subgroup is unique, so N splits
    over it by any involution; the shape holds exactly when that subgroup
    decomposes as a coprime cyclic semidirect product.
    """
    if len(N) % 2 or (len(N) // 2) % 2 == 0:
        raise PreconditionError(f"order {len(N)} is not twice an odd number")
    H = unique_odd_part(N)
    if not is_c_group(H):
        return None
    k, l, t = decompose_burnside(H)
    return ShapeWitness(k, l, t, H)
