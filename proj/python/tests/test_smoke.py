import math

import pytest

import mbbox


def test_massless_closed_form():
    r = mbbox.evaluate(-1.0, -2.0, 0.3)
    assert r["method"] == "closed"
    assert r["value"] == pytest.approx(24.077761462512484, rel=1e-14)
    assert "s_channel" in r["pieces"]


def test_methods_agree():
    ref = mbbox.evaluate(-1.0, -2.0, 0.3, msq=-0.5)["value"]
    for method in ("closed_alt", "residue", "feynman"):
        v = mbbox.evaluate(-1.0, -2.0, 0.3, msq=-0.5, method=method)["value"]
        assert abs(v - ref) <= 1e-8 * abs(ref)


def test_laurent_leading_pole():
    c = mbbox.laurent(-1.0, -2.0)
    assert sorted(c) == [-2, -1, 0]
    assert c[-2].real == pytest.approx(2.0, rel=1e-12)


def test_errors():
    with pytest.raises(mbbox.InputError):
        mbbox.evaluate(1.0, -2.0, 0.3)
    with pytest.raises(ValueError):
        mbbox.evaluate(-1.0, -2.0, 0.3, cut="sideways")


def test_identity_suite():
    r = mbbox.verify("identities")
    assert r["checks"] >= 40
    assert r["failures"] == []
    assert math.isfinite(r["seconds"])
