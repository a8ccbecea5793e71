import pytest

import oddfact


def test_orders():
    assert oddfact.order("G2", [3]) == "4245696"
    assert oddfact.order("OmegaOdd", [3, 3]) == "4585351680"
    with pytest.raises(oddfact.OddfactError):
        oddfact.order("Foo", [3])


def test_audit_is_exact():
    for q in (3, 5, 9, 27):
        ids = oddfact.audit(q)
        assert ids
        assert all(i["holds"] for i in ids)


def test_orbits():
    assert oddfact.orbit(point="e1") == (728, 6298560)
    assert oddfact.orbit(point="e1", action="line")[0] == 364
    assert oddfact.orbit(group="g2", point="v+") == (756, 5616)


def test_verify_row4():
    header, reports = oddfact.verify([4], q=3)
    assert header["schemaVersion"] == oddfact.SCHEMA_VERSION
    assert header["summary"]["mismatches"] == 0
    case = reports[-1]
    assert case["caseId"] == "row4/q=3/SL3"
    assert case["verdict"] == "holds"
    assert case["measured"]["intersection"]["order"] == "8"


def test_verify_is_deterministic():
    a = oddfact.verify_jsonl([2], [3])
    b = oddfact.verify_jsonl([2], [3])
    assert a == b


def test_controls_fail_as_expected():
    header, reports = oddfact.verify([4], q=3, mode="constructive", controls=True)
    ctl = [r for r in reports if r["caseId"].startswith("control/")]
    assert len(ctl) == 2
    assert all(r["verdict"] == "fails" for r in ctl)
    assert "order obstruction 504 < 756" in ctl[0]["reason"]
    assert header["summary"]["mismatches"] == 0


def test_suites_pass():
    for s in oddfact.suites():
        assert s["passed"], s["name"]


def test_discover():
    fp = oddfact.discover(181440)
    assert fp["order"] == "181440"
    assert fp["isPerfect"]
    with pytest.raises(oddfact.OddfactError):
        oddfact.discover(11)
