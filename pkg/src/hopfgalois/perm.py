"""Permutations as image tuples with 0-based points.

A permutation of degree d is a tuple of length d whose entry at x is the
image of point x.  Composition is function composition: ``compose(p, q)``
applies q first.
"""

from __future__ import annotations

from .errors import DegreeMismatchError

Perm = tuple

# Permutations.


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def is_perm(images) -> bool:
    return sorted(images) == list(range(len(images)))


def compose(p: Perm, q: Perm) -> Perm:
    """Return the permutation x -> p(q(x))."""
    if len(p) != len(q):
        raise DegreeMismatchError(f"degree {len(p)} vs {len(q)}")
    return tuple(p[x] for x in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Cycle decomposition, fixed points included, each cycle led by its
    smallest point, cycles sorted by leading point."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        out.append(tuple(cyc))
    return out


def sign(p: Perm) -> int:
    """+1 for even permutations, -1 for odd."""
    return -1 if (len(p) - len(cycles(p))) % 2 else 1


def order(p: Perm) -> int:
    k = 1
    q = p
    ident = identity(len(p))
    while q != ident:
        q = compose(q, p)
        k += 1
    return k


def is_semiregular(p: Perm) -> bool:
    """True iff every cycle of p has the same length (free action of <p>).

    Every non-identity element of a regular permutation group is
    semiregular, which makes this the cheap membership filter for
    regular-subgroup searches.
    """
    cycs = cycles(p)
    length = len(cycs[0])
    return all(len(c) == length for c in cycs)


def cycle_text(p: Perm) -> str:
    """Readable cycle form, e.g. ``(0 1 2)(3 4)``; ``()`` for the identity."""
    parts = ["(" + " ".join(map(str, c)) + ")" for c in cycles(p) if len(c) > 1]
    return "".join(parts) if parts else "()"
