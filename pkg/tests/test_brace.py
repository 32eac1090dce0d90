import random

import pytest

from hopfgalois import (
    Cyclic,
    Dihedral,
    DirectProduct,
    SemidirectCC,
    SkewBrace,
    additive_group,
    are_isomorphic,
    brace_from_regular,
    build,
    catalog,
    holomorph,
    lambda_circ_in_hol,
    multiplicative_group,
    regular_subgroups,
    trivial_brace,
    verify_brace,
)
from hopfgalois.brace import group_table_identity, is_group_table
from hopfgalois.errors import PreconditionError

from conftest import C, D


def table_of(G):
    n = len(G)
    return tuple(tuple(G.mul(i, j) for j in range(n)) for i in range(n))


def relabel_table(table, images):
    """Transport a group table along a bijection of its carrier."""
    n = len(table)
    inv = [0] * n
    for x, y in enumerate(images):
        inv[y] = x
    return tuple(
        tuple(images[table[inv[a]][inv[b]]] for b in range(n)) for a in range(n)
    )


def test_trivial_brace_abelian():
    assert verify_brace(trivial_brace(C(6)))


def test_trivial_brace_nonabelian():
    # the law reads the middle term as the additive inverse; with the
    # multiplicative-inverse reading this brace would fail
    B = trivial_brace(build(SemidirectCC(3, 2, 2)))
    assert verify_brace(B)
    assert lambda_circ_in_hol(B)


def test_mismatched_identity_pair_fails():
    z4 = table_of(C(4))
    v4 = table_of(build(DirectProduct(Cyclic(2), Cyclic(2))))
    # relabel V4 so its identity moves away from Z4's
    moved = relabel_table(v4, (1, 0, 2, 3))
    B = SkewBrace(4, z4, moved)
    assert is_group_table(moved)
    assert group_table_identity(moved) != group_table_identity(z4)
    assert not verify_brace(B)


def test_non_group_table_fails():
    z4 = table_of(C(4))
    broken = [list(r) for r in z4]
    broken[1][2], broken[1][3] = broken[1][3], broken[1][2]
    B = SkewBrace(4, z4, tuple(tuple(r) for r in broken))
    assert not verify_brace(B)


def test_relabelled_z4_leaves_holomorph():
    # identity-fixing bijection that is not an automorphism
    z4 = table_of(C(4))
    relabeled = relabel_table(z4, (0, 1, 3, 2))
    B = SkewBrace(4, z4, relabeled)
    assert is_group_table(relabeled)
    assert group_table_identity(relabeled) == group_table_identity(z4)
    assert not lambda_circ_in_hol(B)
    assert not verify_brace(B)


def test_brace_from_translations_is_trivial():
    N = C(6)
    hol = holomorph(N)
    from hopfgalois.groups import PermGroup

    lam = PermGroup(len(N), hol.lam)
    B = brace_from_regular(lam, N)
    assert B.add_table == B.mul_table
    assert verify_brace(B)


def test_brace_mixed_types():
    N = C(6)
    recs = regular_subgroups(holomorph(N))
    nonabelian = next(r for r in recs if r.iso_text == "D6")
    B = brace_from_regular(nonabelian.subgroup, N)
    assert verify_brace(B) and lambda_circ_in_hol(B)
    assert are_isomorphic(additive_group(B), C(6)) is not None
    assert are_isomorphic(multiplicative_group(B), D(6)) is not None
    # the multiplicative translations are exactly the regular subgroup
    assert frozenset(multiplicative_group(B).elements) == frozenset(
        nonabelian.subgroup.elements
    )


def test_middle_term_is_the_additive_inverse():
    # on a brace whose two inverses differ, only the additive reading of
    # the law's middle term survives; the multiplicative reading breaks
    N = C(6)
    rec = next(
        r for r in regular_subgroups(holomorph(N)) if r.iso_text == "D6"
    )
    B = brace_from_regular(rec.subgroup, N)
    add, mul, n = B.add_table, B.mul_table, B.size
    e = group_table_identity(add)
    neg = [next(x for x in range(n) if add[a][x] == e) for a in range(n)]
    inv_mul = [next(x for x in range(n) if mul[a][x] == e) for a in range(n)]
    assert neg != inv_mul  # the readings genuinely differ here

    def violations(middle):
        return sum(
            mul[a][add[b][c]] != add[add[mul[a][b]][middle[a]]][mul[a][c]]
            for a in range(n)
            for b in range(n)
            for c in range(n)
        )

    assert violations(neg) == 0
    assert violations(inv_mul) > 0


def test_brace_from_regular_rejects_non_regular():
    N = C(6)
    from hopfgalois.groups import closure

    refl = closure([tuple((-x) % 6 for x in range(6))])
    with pytest.raises(PreconditionError):
        brace_from_regular(refl, N)


def test_lambda_circ_requires_group_addition():
    z4 = table_of(C(4))
    broken = [list(r) for r in z4]
    broken[1][2], broken[1][3] = broken[1][3], broken[1][2]
    B = SkewBrace(4, tuple(tuple(r) for r in broken), z4)
    with pytest.raises(PreconditionError):
        lambda_circ_in_hol(B)


STOCK_SPECS = {
    2: [Cyclic(2)],
    3: [Cyclic(3)],
    4: [Cyclic(4), DirectProduct(Cyclic(2), Cyclic(2))],
    5: [Cyclic(5)],
    6: [Cyclic(6), SemidirectCC(3, 2, 2)],
    7: [Cyclic(7)],
    8: [
        Cyclic(8),
        DirectProduct(Cyclic(2), Cyclic(4)),
        DirectProduct(Cyclic(2), DirectProduct(Cyclic(2), Cyclic(2))),
        Dihedral(8),
    ],
}


def random_pair(rng):
    size = rng.choice(sorted(STOCK_SPECS))
    add_G = build(rng.choice(STOCK_SPECS[size]))
    mul_G = build(rng.choice(STOCK_SPECS[size]))
    add = table_of(add_G)
    mul = table_of(mul_G)
    # identity-fixing relabel keeps both tables groups with one identity
    rest = list(range(1, size))
    rng.shuffle(rest)
    images = tuple([0] + rest)
    return SkewBrace(size, add, relabel_table(mul, images))


def test_biconditional_on_random_group_pairs():
    # verify_brace and holomorph membership must agree on group-table
    # pairs sharing an identity, brace or not (smoke version; the full
    # 1000-pair run lives in the acceptance suite)
    rng = random.Random(20240817)
    seen_false = 0
    for _ in range(200):
        B = random_pair(rng)
        a, b = verify_brace(B), lambda_circ_in_hol(B)
        assert a == b
        seen_false += not a
    assert seen_false > 0  # adversarial cases genuinely exercised


def test_every_brace_at_order_10_verifies():
    for entry in catalog(10):
        hol = holomorph(entry.group)
        for rec in regular_subgroups(hol):
            B = brace_from_regular(rec.subgroup, entry.group)
            assert verify_brace(B)
            assert lambda_circ_in_hol(B)
