import time

import pytest

from og6lattice.claims import CLAIMS, verify_claims


def test_smoke_run_is_fast_and_green():
    start = time.perf_counter()
    results = verify_claims(seed=3, scale="smoke")
    assert time.perf_counter() - start < 10
    assert [r.id for r in results] == sorted(CLAIMS)
    assert all(r.passed for r in results), [(r.id, r.detail) for r in results if not r.passed]


def test_results_depend_only_on_seed():
    a = verify_claims(seed=5, scale="smoke", only=["transport-roundtrip", "monodromy-generation"])
    b = verify_claims(seed=5, scale="smoke", only=["transport-roundtrip", "monodromy-generation"])
    assert [(r.id, r.status, r.detail) for r in a] == [(r.id, r.status, r.detail) for r in b]


def test_bad_scale():
    with pytest.raises(ValueError):
        verify_claims(scale="huge")
