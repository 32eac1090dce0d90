"""Machine-checking the classification statements on real instances.

Each audit quantifies a statement over the exhaustive small-order
catalog, runs the realizability engine for the hypotheses, checks the
asserted conclusion, and reports pass/fail/vacuous with its full domain.
A pass is evidence at the audited orders, not a proof.
"""

from hopfgalois import run_audit

print("Audits at n = 15 (groups of order 30)")
for tid in ("p001", "t001", "t002", "t003", "t004", "p005", "r002"):
    rep = run_audit(tid, 15)
    held = sum(1 for i in rep.instances if i.hypothesis_held)
    print(
        f"  {tid:>9}: {rep.verdict:<8} instances = {len(rep.instances):>3} "
        f"(hypothesis held on {held})"
    )
    for flag in rep.flags:
        print(f"             flag: {flag}")
print()

print("The Burnside-number hypothesis matters: at n = 21 the family")
print("equivalence audit is vacuous because radical(21) = 21 fails it")
rep = run_audit("t004", 21)
print(f"  t004 at n=21: {rep.verdict}")
print()

print("Short-exact-sequence audit at n = 6 (order-12 catalog)")
rep = run_audit("ses_final", 6)
print(f"  verdict: {rep.verdict}")
for inst in rep.instances:
    print(
        f"  {inst.subject:<18} hypothesis = {str(inst.hypothesis_held):<5} "
        f"conclusion = {inst.conclusion_held} {inst.witness}"
    )
print()
print("A4 is the interesting row: it has no index-2 subgroup, so the")
print("statement survives only because (A4, D12) is not realizable.")
