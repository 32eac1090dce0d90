"""Shared builders and independent brute-force oracles.

The oracles here deliberately avoid the library's generator-word
machinery: homomorphisms are found by backtracking over full element
image tables, automorphisms by filtering all bijections, and crossed
homomorphisms by filtering all identity-fixing bijections.  They exist so
the fast engines can be checked against something slow and obviously
correct.
"""

import itertools

import pytest

from hopfgalois import (
    Cyclic,
    Dihedral,
    DirectProduct,
    SemidirectCC,
    build,
)


def C(n):
    return build(Cyclic(n))


def D(order):
    return build(Dihedral(order))


@pytest.fixture(scope="session")
def s3():
    return build(SemidirectCC(3, 2, 2))


@pytest.fixture(scope="session")
def z3xz3():
    return build(DirectProduct(Cyclic(3), Cyclic(3)))


def brute_force_homomorphisms(G, H):
    """Backtracking over full element-image tables, no generator theory."""
    n = len(G)
    found = []

    def extend(images):
        i = len(images)
        if i == n:
            found.append(tuple(images))
            return
        for h in range(len(H)):
            images.append(h)
            ok = True
            for a in range(i + 1):
                for b in range(i + 1):
                    c = G.mul(a, b)
                    if c <= i and images[c] != H.mul(images[a], images[b]):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                extend(images)
            images.pop()

    extend([])
    return sorted(found)


def brute_force_automorphisms(N):
    """Filter every bijection of the element list for multiplicativity."""
    n = len(N)
    out = []
    for images in itertools.permutations(range(n)):
        if images[N.identity_index] != N.identity_index:
            continue
        if all(
            images[N.mul(a, b)] == N.mul(images[a], images[b])
            for a in range(n)
            for b in range(n)
        ):
            out.append(tuple(images))
    return sorted(out)


def brute_force_bijective_crossed_homs(f, G, N):
    """Filter every identity-fixing bijection G -> N against the law."""
    n = len(G)
    e_g, e_n = G.identity_index, N.identity_index
    others = [i for i in range(n) if i != e_g]
    values = [i for i in range(n) if i != e_n]
    out = []
    for perm_vals in itertools.permutations(values):
        g = [None] * n
        g[e_g] = e_n
        for slot, val in zip(others, perm_vals):
            g[slot] = val
        if all(
            g[G.mul(a, b)] == N.mul(g[a], f.image_perm(a)[g[b]])
            for a in range(n)
            for b in range(n)
        ):
            out.append(tuple(g))
    return sorted(out)
