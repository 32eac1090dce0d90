"""From regular subgroups to skew braces.

Every regular subgroup R of Hol(N, +) induces a second group law on N's
carrier: a o b = pi_a(b), where pi_a is the unique element of R sending
the additive identity to a.  The result is a skew brace: both laws share
one carrier and satisfy a o (b + c) = (a o b) + (-a) + (a o c).
"""

from hopfgalois import (
    additive_group,
    are_isomorphic,
    brace_from_regular,
    build,
    catalog,
    holomorph,
    lambda_circ_in_hol,
    parse_group_spec,
    regular_subgroups,
    verify_brace,
)

N = build(parse_group_spec("C6"))
hol = holomorph(N)
print(f"Hol(C6) has order {len(hol.group)} acting on {hol.group.degree} points")
records = regular_subgroups(hol)
print(f"regular subgroups: {[r.iso_text for r in records]}")
print()

for rec in records:
    B = brace_from_regular(rec.subgroup, N)
    add_type = "C6" if are_isomorphic(additive_group(B), N) else "?"
    print(f"brace from the {rec.iso_text} subgroup:")
    print(f"  additive group:       {add_type}")
    print(f"  multiplicative group: {rec.iso_text}")
    print(f"  brace law holds:      {verify_brace(B)}")
    print(f"  rows lie in Hol(+):   {lambda_circ_in_hol(B)}")
    if rec.iso_text != "C6":
        print("  multiplication table (a o b):")
        for row in B.mul_table:
            print("   ", " ".join(map(str, row)))
    print()

print("Census of braces at order 30, by (additive, multiplicative) type")
counts = {}
for entry in catalog(30):
    hol = holomorph(entry.group)
    for rec in regular_subgroups(hol):
        B = brace_from_regular(rec.subgroup, entry.group)
        assert verify_brace(B)
        key = (entry.spec.text(), rec.iso_text)
        counts[key] = counts.get(key, 0) + 1
for (add, mul), c in sorted(counts.items()):
    print(f"  + = {add:<12} o = {mul:<12} count = {c}")
print(f"  total: {sum(counts.values())}")
