"""Deciding pair realizability by two independent routes.

Route one enumerates bijective crossed homomorphisms: for f a homomorphism
G -> Aut(N), a map g: G -> N with g(ab) = g(a) f(a)(g(b)) that is bijective
pins down a regular subgroup {x -> g(a) * f(a)(x)} of Hol(N) isomorphic
to G, and every such subgroup arises this way.

Route two searches Hol(N) for regular subgroups directly (full subgroup
lattice when Hol is small, otherwise closure over pairs of semiregular
elements) and tags each one with its isomorphism class.  The two routes
must agree; tests hold them against each other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import perm
from .errors import BoundExceededError, CountingBugError, PreconditionError
from .factory import (
    HolomorphGroup,
    automorphism_group,
    catalog,
    class_index,
    holomorph,
)
from .groups import (
    Homomorphism,
    PermGroup,
    bfs_order,
    homomorphisms,
    is_regular,
    are_isomorphic,
    subgroups_of_order,
)
from .parallel import parallel_map

LATTICE_BOUND = 400    # max |Hol(N)| for the subgroup-lattice strategy
PAIR_SEARCH_MAX = 30   # max |N| for the generator-pair strategy


@dataclass(frozen=True)
class CrossedHom:
    """A pair (f, g): f in Hom(G, Aut(N)), g a crossed homomorphism.

    ``g`` maps G element indices to N element indices; ``f.codomain`` is
    the automorphism group acting on N's element indices.
    """

    f: Homomorphism
    g: tuple
    n_group: PermGroup
    bijective: bool

    @property
    def domain(self) -> PermGroup:
        return self.f.domain

    def verify_law(self) -> bool:
        """Check g(ab) = g(a) f(a)(g(b)) on every pair of G elements."""
        G, N = self.domain, self.n_group
        g = self.g
        f_perms = [self.f.image_perm(a) for a in range(len(G))]
        mul_g, mul_n = G.mul, N.mul
        return all(
            g[mul_g(a, b)] == mul_n(g[a], f_perms[a][g[b]])
            for a in range(len(G))
            for b in range(len(G))
        )


@dataclass(frozen=True)
class RegularSubgroupRecord:
    subgroup: PermGroup
    iso_index: int
    iso_text: str
    witness: "CrossedHom | None"
    strategy: str


def crossed_homomorphisms(f: Homomorphism, G: PermGroup, N: PermGroup, limit=None):
    """All bijective crossed homomorphisms G -> N with respect to f.

    Candidate generator images are filtered by consistency along each
    generator's cyclic subgroup, extended over a fixed breadth-first
    factorization of G, and kept only when the cocycle law holds on every
    (element, generator) product, which forces it on all pairs.  The empty
    list is a valid result.  ``limit`` stops the scan early once that many
    witnesses exist.
    """
    if len(G) != len(N):
        raise PreconditionError("crossed homomorphisms need |G| = |N|")
    gens = G.minimal_generating_set()
    gen_idxs = [G.index_of(p) for p in gens]
    order, parent = bfs_order(G, gen_idxs)
    n = len(G)
    N.table()
    mul_n = N.mul
    e_n = N.identity_index
    f_perms = [f.image_perm(a) for a in range(n)]
    cands = [
        _cyclic_consistent_images(G, N, f_perms, gi) for gi in gen_idxs
    ]
    out = []
    mul_g = G.mul
    for choice in itertools.product(*cands):
        g = [None] * n
        g[G.identity_index] = e_n
        used = bytearray(n)
        used[e_n] = 1
        ok = True
        for i in order[1:]:
            prev, pos = parent[i]
            val = mul_n(g[prev], f_perms[prev][choice[pos]])
            if used[val]:
                ok = False
                break
            used[val] = 1
            g[i] = val
        if not ok:
            continue
        for x in range(n):
            gx = g[x]
            fx = f_perms[x]
            for pos, gi in enumerate(gen_idxs):
                if g[mul_g(x, gi)] != mul_n(gx, fx[choice[pos]]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(CrossedHom(f, tuple(g), N, True))
            if limit is not None and len(out) >= limit:
                break
    out.sort(key=lambda c: c.g)
    return out


def _cyclic_consistent_images(G, N, f_perms, gen_idx):
    """Images x = g(a) whose forced orbit along <a> returns to the identity.

    The cocycle law determines g on powers of a from g(a) alone:
    g(a^(j+1)) = g(a) * f(a)(g(a^j)).  The orbit must be injective and
    close up at a's order, so everything else is pruned before the
    product scan.
    """
    r = G.order_of(gen_idx)
    fa = f_perms[gen_idx]
    mul_n = N.mul
    e_n = N.identity_index
    good = []
    for x in range(len(N)):
        v = e_n
        seen = set()
        ok = True
        for _ in range(r):
            v = mul_n(x, fa[v])
            if v in seen:
                ok = False
                break
            seen.add(v)
        if ok and v == e_n:
            good.append(x)
    return good


def subgroup_from_cocycle(c: CrossedHom, hol: HolomorphGroup) -> RegularSubgroupRecord:
    """The subset {x -> g(a) * f(a)(x) : a in G} of Hol(N), as a subgroup.

    The construction is guaranteed to be a regular subgroup isomorphic to
    the domain; the postconditions are asserted, so a failure here means
    an implementation bug.
    """
    G = c.domain
    if not c.bijective:
        raise PreconditionError("cocycle witness must be bijective")
    perms = set()
    for a in range(len(G)):
        h = perm.compose(hol.lam[c.g[a]], hol.iota[c.f.images[a]])
        perms.add(h)
    if len(perms) != len(G):
        raise CountingBugError("cocycle image has repeated holomorph elements")
    for p, q in itertools.product(perms, repeat=2):
        if perm.compose(p, q) not in perms:
            raise CountingBugError("cocycle image is not closed")
    sub = PermGroup(hol.group.degree, perms)
    if not is_regular(sub):
        raise CountingBugError("cocycle image is not regular")
    if are_isomorphic(sub, G) is None:
        raise CountingBugError("cocycle image is not isomorphic to the domain")
    entries = catalog(len(G))
    idx = class_index(sub, entries)
    return RegularSubgroupRecord(sub, idx, entries[idx].spec.text(), c, "cocycle")


def realizable_via_cocycles(G: PermGroup, N: PermGroup, threads=1):
    """A witness (f, g) if G embeds as a regular subgroup of Hol(N).

    Iterates f over Hom(G, Aut(N)) in canonical order and returns the
    first bijective crossed homomorphism, or None.
    """
    if len(G) != len(N):
        raise PreconditionError("realizability needs |G| = |N|")
    aut = automorphism_group(N)
    homs = homomorphisms(G, aut)

    def probe(f):
        found = crossed_homomorphisms(f, G, N, limit=1)
        return found[0] if found else None

    if threads <= 1:
        for f in homs:
            w = probe(f)
            if w is not None:
                return w
        return None
    for block_start in range(0, len(homs), threads):
        block = homs[block_start : block_start + threads]
        for w in parallel_map(probe, block, threads=threads):
            if w is not None:
                return w
    return None


def count_crossed_pairs(G: PermGroup, N: PermGroup) -> int:
    """Total number of (f, g) pairs over every f in Hom(G, Aut(N))."""
    aut = automorphism_group(N)
    return sum(
        len(crossed_homomorphisms(f, G, N)) for f in homomorphisms(G, aut)
    )


# Direct search for regular subgroups.


def _semiregular_elements(H: PermGroup):
    ident = perm.identity(H.degree)
    return [p for p in H.elements if p != ident and perm.is_semiregular(p)]


def _pair_search(hol_group: PermGroup, m: int, threads=1):
    """All order-m regular subgroups closed from <= 2 semiregular elements.

    Non-identity elements of a regular subgroup are semiregular, so the
    closure aborts as soon as it leaves the semiregular pool or outgrows
    m.  Complete whenever every order-m regular subgroup is 2-generated,
    which holds for every catalog order (squarefree and the hard-coded
    exceptions are all metacyclic or 2-generated).
    """
    ident = perm.identity(hol_group.degree)
    semis = _semiregular_elements(hol_group)
    orders = {p: perm.order(p) for p in semis}
    semis.sort(key=lambda p: (-orders[p], p))
    pool = set(semis)
    pool.add(ident)
    found: list[frozenset] = []
    found_keys: set[frozenset] = set()
    member: dict = {}

    def close_pair(gens):
        elems = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = perm.compose(x, g)
                    if y not in elems:
                        if y not in pool or len(elems) >= m:
                            return None
                        elems.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(elems) if len(elems) == m else None

    def record(S):
        if S in found_keys:
            return
        found_keys.add(S)
        gid = len(found)
        found.append(S)
        for p in S:
            if p != ident:
                member.setdefault(p, set()).add(gid)

    for a in semis:
        if orders[a] == m:
            S = close_pair((a,))
            if S is not None:
                record(S)

    def scan(i):
        # A pair lying inside a known regular subgroup closes to that
        # subgroup or to a proper (hence non-regular) piece of it, so it
        # can be skipped outright.
        a = semis[i]
        oa = orders[a]
        groups_a = member.get(a)
        hits = []
        for b in semis[i + 1 :]:
            if oa * orders[b] < m:
                continue
            if groups_a:
                groups_b = member.get(b)
                if groups_b and not groups_a.isdisjoint(groups_b):
                    continue
            S = close_pair((a, b))
            if S is not None:
                hits.append(S)
        return hits

    # Results feed back between chunks so the skip index keeps growing;
    # the final set is order-independent because skips only ever drop
    # pairs that rediscover known subgroups.
    chunk = max(1, threads * 8)
    for start in range(0, len(semis), chunk):
        results = parallel_map(
            scan, range(start, min(start + chunk, len(semis))), threads=threads
        )
        for hits in results:
            for S in hits:
                record(S)
    regular = []
    for S in found:
        points = {p[0] for p in S}
        if len(points) == hol_group.degree:
            regular.append(S)
    return sorted(regular, key=lambda s: tuple(sorted(s)))


def regular_subgroups(
    hol: HolomorphGroup,
    lattice_bound=LATTICE_BOUND,
    pair_max=PAIR_SEARCH_MAX,
    threads=1,
    strategy=None,
):
    """Every regular subgroup of Hol(N), tagged with its catalog class.

    Strategy: the full subgroup lattice when |Hol(N)| fits the subgroup
    bound, otherwise generator-pair closure (|N| capped).  The choice is
    recorded on each output record.
    """
    use_cache = strategy is None
    if use_cache:
        cache = getattr(hol, "_regular_records", None)
        if cache is not None:
            return list(cache)
    N = hol.n_group
    m = len(N)
    if strategy is None:
        if len(hol.group) <= lattice_bound:
            strategy = "subgroup-lattice"
        elif m <= pair_max:
            strategy = "generator-pairs"
        else:
            raise BoundExceededError(
                f"|Hol| = {len(hol.group)} and |N| = {m} exceed both strategies"
            )
    if strategy == "subgroup-lattice":
        subs = subgroups_of_order(hol.group, m, bound=lattice_bound)
        sets = [frozenset(S.elements) for S in subs if is_regular(S)]
    elif strategy == "generator-pairs":
        sets = _pair_search(hol.group, m, threads=threads)
    else:
        raise PreconditionError(f"unknown strategy {strategy!r}")
    entries = catalog(m)
    records = []
    for S in sorted(sets, key=lambda s: tuple(sorted(s))):
        sub = PermGroup(hol.group.degree, S)
        idx = class_index(sub, entries)
        records.append(
            RegularSubgroupRecord(sub, idx, entries[idx].spec.text(), None, strategy)
        )
    if use_cache:
        hol._regular_records = records
    return list(records)


def realizable_via_search(G: PermGroup, N: PermGroup, threads=1) -> bool:
    """True iff the direct Hol(N) search finds a regular subgroup iso to G."""
    if len(G) != len(N):
        raise PreconditionError("realizability needs |G| = |N|")
    records = regular_subgroups(holomorph(N), threads=threads)
    target = class_index(G, catalog(len(N)))
    return any(r.iso_index == target for r in records)


# Characteristic-subgroup transport.


def transport_characteristic(c: CrossedHom, M: PermGroup):
    """Pull a characteristic subgroup M of N back through a witness.

    H = g^-1(M) is asserted to be a subgroup of G of order |M|, and the
    pair (H, M) is asserted realizable; a failure is reported as a bug or
    a genuine discrepancy, never passed silently.
    """
    G, N = c.domain, c.n_group
    m_idxs = {N.index_of(p) for p in M.elements}
    h_idxs = [a for a in range(len(G)) if c.g[a] in m_idxs]
    if len(h_idxs) != len(M):
        raise CountingBugError(
            f"preimage has {len(h_idxs)} elements, expected {len(M)}"
        )
    h_set = set(h_idxs)
    for a in h_idxs:
        for b in h_idxs:
            if G.mul(a, b) not in h_set:
                raise CountingBugError("preimage of a characteristic subgroup is not closed")
    H = G.subgroup_from_indices(h_idxs)
    witness = realizable_via_cocycles(H, M)
    if witness is None:
        raise CountingBugError(
            "transported pair is not realizable; paper discrepancy or bug"
        )
    return H, witness
