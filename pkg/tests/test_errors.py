from __future__ import annotations

import pytest

from fatdiag.errors import (
    FatdiagError,
    InternalConsistencyError,
    OracleMismatchError,
    ResourceGuardError,
    UnsupportedSpaceError,
    check_guard,
    guard_scale,
)


def test_exception_hierarchy():
    for cls in (
        UnsupportedSpaceError,
        OracleMismatchError,
        ResourceGuardError,
        InternalConsistencyError,
    ):
        assert issubclass(cls, FatdiagError)
    assert issubclass(FatdiagError, Exception)


def test_guard_scale_default(monkeypatch):
    monkeypatch.delenv("FATDIAG_GUARD_SCALE", raising=False)
    assert guard_scale() == 1.0
    monkeypatch.setenv("FATDIAG_GUARD_SCALE", "")
    assert guard_scale() == 1.0


def test_guard_scale_parsing(monkeypatch):
    monkeypatch.setenv("FATDIAG_GUARD_SCALE", "2.5")
    assert guard_scale() == 2.5
    monkeypatch.setenv("FATDIAG_GUARD_SCALE", "0.25")
    assert guard_scale() == 0.25


def test_guard_scale_rejects_garbage(monkeypatch):
    monkeypatch.setenv("FATDIAG_GUARD_SCALE", "fast")
    with pytest.raises(FatdiagError):
        guard_scale()
    monkeypatch.setenv("FATDIAG_GUARD_SCALE", "-1")
    with pytest.raises(FatdiagError):
        guard_scale()
    monkeypatch.setenv("FATDIAG_GUARD_SCALE", "0")
    with pytest.raises(FatdiagError):
        guard_scale()


def test_check_guard_boundary(monkeypatch):
    monkeypatch.delenv("FATDIAG_GUARD_SCALE", raising=False)
    check_guard(10, 10, "exact limit passes")
    with pytest.raises(ResourceGuardError):
        check_guard(11, 10, "over limit")


def test_check_guard_scales_both_ways(monkeypatch):
    monkeypatch.setenv("FATDIAG_GUARD_SCALE", "2")
    check_guard(19, 10, "raised limit passes")
    monkeypatch.setenv("FATDIAG_GUARD_SCALE", "0.5")
    with pytest.raises(ResourceGuardError):
        check_guard(6, 10, "lowered limit fails")


def test_guard_message_mentions_knob(monkeypatch):
    monkeypatch.delenv("FATDIAG_GUARD_SCALE", raising=False)
    with pytest.raises(ResourceGuardError, match="FATDIAG_GUARD_SCALE"):
        check_guard(2, 1, "thing")
