"""Smoke tests for the python bindings (run with PYTHONPATH=<build>/python)."""

import pytest

import revnf


def test_import_surface():
    assert "resonant-1-2" in revnf.builtin_specs()
    text = revnf.builtin_spec_text("nilpotent-2d")
    assert '"dimension": 2' in text


def test_complement_dims():
    result = revnf.complement("nilpotent-2d", k_from=2, k_to=4)
    dims = [s["dim"] for s in result["complements"]]
    assert dims == [2, 2, 2]


def test_golden_z2():
    report = revnf.golden("z2", 1, 1, k_to=3)
    assert report["pass"] is True
    assert report["type"] == "A"
    assert [line["k"] for line in report["degrees"]] == [2, 3]


def test_verify_decompose_plus():
    report = revnf.verify("decompose-plus", "resonant-1-2", k_to=2)
    assert report["pass"] is True
    assert report["failures"] == []


def test_hilbert_basis_shape():
    report = revnf.hilbert(1, 1, dmax=4)
    assert report["pass"] is True
    assert len(report["basis"]) == 4


def test_normal_form_requires_valid_spec():
    with pytest.raises(ValueError):
        revnf.parse_spec_echo('{"dimension": 0}')


def test_parse_echo_round_trip():
    text = revnf.builtin_spec_text("resonant-1-1")
    echo = revnf.parse_spec_echo(text)
    assert revnf.parse_spec_echo(echo) == echo
