import pytest

from septica import checks
from septica.errors import NonConvergenceError, RegistryError


def test_registry_size_and_ids():
    ids = checks.check_ids()
    assert len(ids) >= 30
    assert ids == sorted(set(ids))
    for required in ("thm1", "g343-cross", "thm-e49", "trig-41", "disc-product-p5"):
        assert required in ids


def test_single_check():
    result = checks.run_check("trig-41", 60)
    assert result.passed and result.digits_agreed >= 58
    assert result.lhs.startswith("41.000000")


def test_thm1_passes():
    assert checks.run_check("thm1", 60).passed


def test_unknown_check():
    with pytest.raises(RegistryError):
        checks.run_check("nonexistent")
    with pytest.raises(RegistryError):
        checks.run_all(30, ids=["nonexistent"])


def test_full_suite_at_30_digits():
    results = checks.run_all(30)
    assert [r.check_id for r in results] == checks.check_ids()
    failed = [r for r in results if not r.passed]
    assert not failed, failed
    for r in results:
        assert r.required_digits == max(1, 30 - checks.get_check(r.check_id).margin)


def test_parallel_matches_serial():
    ids = checks.check_ids()[::7]
    serial = checks.run_all(30, ids=ids)
    parallel = checks.run_all(30, parallel=True, ids=ids)
    assert [(r.check_id, r.digits_agreed, r.lhs, r.rhs) for r in serial] == \
           [(r.check_id, r.digits_agreed, r.lhs, r.rhs) for r in parallel]


def test_library_errors_become_failures(monkeypatch):
    def broken(ctx):
        raise NonConvergenceError("series did not converge")

    monkeypatch.setitem(checks.CHECKS, "trig-41", checks.Check("trig-41", "broken", broken))
    results = {r.check_id: r for r in checks.run_all(30, ids=["trig-41", "thm1"])}
    assert not results["trig-41"].passed
    assert results["trig-41"].error_kind == "NonConvergenceError"
    assert results["trig-41"].required_digits == 30 - checks.DEFAULT_MARGIN
    assert results["thm1"].passed


def test_nome_labels(ctx):
    mp = ctx.mp
    assert checks.nome_for("e-pi", ctx) == mp.exp(-mp.pi)
    assert checks.nome_for("0.2", ctx) == mp.mpf("0.2")
    assert abs(checks.nome_for("e-pi-7", ctx) - mp.exp(-mp.pi / 7)) < mp.mpf(10) ** -58
