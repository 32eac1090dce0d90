import json

import pytest

from hopfgalois import run_audit
from hopfgalois.audit import (
    AuditInstance,
    _verdict,
    audit_c001,
    audit_p001,
    audit_p003,
    audit_p004,
    audit_p005,
    audit_r002,
    audit_ses_final,
    audit_t001,
    audit_t002,
    audit_t003,
    audit_t004,
)
from hopfgalois.errors import PreconditionError


def test_verdict_logic():
    ok = AuditInstance("a", True, True)
    bad = AuditInstance("b", True, False)
    idle = AuditInstance("c", False, None)
    assert _verdict([ok]) == "pass"
    assert _verdict([ok, bad]) == "fail"
    assert _verdict([idle]) == "vacuous"
    assert _verdict([idle, ok]) == "pass"


def test_p001_small():
    report = audit_p001(6)
    assert report.verdict == "pass"
    assert len(report.instances) == 2
    report = audit_p001(30)
    assert report.verdict == "pass"
    assert len(report.instances) == 14


def test_p001_rejects_bad_order():
    with pytest.raises(PreconditionError):
        audit_p001(4)
    with pytest.raises(PreconditionError):
        audit_p001(6, orders=[4])


def test_p001_domain_override():
    report = audit_p001(62, orders=[42])
    assert report.verdict == "pass"
    assert len(report.instances) == 6  # the six order-42 classes


def test_t001_pass_and_nonvacuous():
    for n in (3, 15):
        report = audit_t001(n)
        assert report.verdict == "pass"
        assert any(i.hypothesis_held for i in report.instances)


def test_t003_flags_typo_reading():
    report = audit_t003(3)
    assert report.verdict == "pass"
    assert any("typo" in f for f in report.flags)


def test_t004_pass_and_vacuous():
    assert audit_t004(15).verdict == "pass"
    vac = audit_t004(21)
    assert vac.verdict == "vacuous"
    assert vac.instances == ()
    assert any("Burnside" in f for f in vac.flags)


def test_r002_every_twist():
    report = audit_r002(15)
    assert report.verdict == "pass"
    assert len(report.instances) == 4
    assert all(i.hypothesis_held and i.conclusion_held for i in report.instances)


def test_p005():
    report = audit_p005(15)
    assert report.verdict == "pass"
    assert len(report.instances) == 4


def test_p003_p004_order_21():
    r3 = audit_p003(21)
    assert r3.verdict == "pass" and len(r3.instances) == 2
    assert any("cannot fail at this order" in i.note for i in r3.instances)
    r4 = audit_p004(21)
    assert r4.verdict == "pass" and len(r4.instances) == 2


def test_p003_rejects_even_or_nonsquarefree():
    with pytest.raises(PreconditionError):
        audit_p003(6)
    with pytest.raises(PreconditionError):
        audit_p003(9)


def test_t002_includes_trivial_and_full():
    report = audit_t002(3)
    assert report.verdict == "pass"
    sizes = {i.subject.split("|M| = ")[-1] for i in report.instances if "|M|" in i.subject}
    assert {"1", "6"} <= sizes


def test_ses_final_order_12():
    report = audit_ses_final(6)
    assert report.verdict == "pass"
    assert len(report.instances) == 5
    a4 = next(i for i in report.instances if i.subject.startswith("(A4"))
    # the one group without an index-2 subgroup never satisfies the hypothesis
    assert not a4.hypothesis_held
    assert any("kl = n" in f for f in report.flags)


def test_ses_final_unsupported_order():
    report = audit_ses_final(10)
    assert report.verdict == "unsupported"
    assert report.instances == ()


def test_ses_final_rejects_wrong_n():
    with pytest.raises(PreconditionError):
        audit_ses_final(3)
    with pytest.raises(PreconditionError):
        audit_ses_final(4)


def test_c001_order_12():
    report = audit_c001(12)
    assert report.verdict == "pass"
    hyp = {i.subject: i.hypothesis_held for i in report.instances}
    assert hyp["C12"] and hyp["SD(3,4;2)"]
    assert not hyp["D12"] and not hyp["A4"] and not hyp["C2xC6"]


def test_run_audit_dispatch():
    assert run_audit("t001", 3).verdict == "pass"
    assert run_audit("p001", 3).order == 6
    with pytest.raises(PreconditionError):
        run_audit("zzz", 3)


def test_reports_are_deterministic():
    a = json.dumps(audit_t001(3).to_dict(), sort_keys=True)
    b = json.dumps(audit_t001(3).to_dict(), sort_keys=True)
    assert a == b


def test_report_records_domain():
    report = audit_t001(3)
    assert "twists" in report.domain and "catalog" in report.domain
    assert report.to_dict()["scope_note"]
