"""Instance generation, theorem verification, and the randomized search."""

import pytest

from extremal_spheres import (
    InputError,
    TrialConfig,
    check_generic,
    derive_seed,
    gen_polytope,
    run_trials,
    search_min_bm_ears,
    verify_theorems,
)


def test_derive_seed_is_deterministic_and_spread():
    seeds = [derive_seed(1, t) for t in range(100)]
    assert seeds == [derive_seed(1, t) for t in range(100)]
    assert len(set(seeds)) == 100
    assert derive_seed(1, 0) != derive_seed(2, 0)


def test_gen_polytope_2d():
    cfg = TrialConfig(d=2, n=(6, 6), seed=1, trials=1)
    pts = gen_polytope(cfg, 0)
    assert len(pts) == 6
    assert check_generic(pts, 2).is_generic
    assert gen_polytope(cfg, 0) == pts


def test_gen_polytope_minimum_3d():
    cfg = TrialConfig(d=3, n=(5, 5), seed=9, trials=1)
    pts = gen_polytope(cfg, 0)
    assert len(pts) == 5
    assert check_generic(pts, 3).is_generic


def test_config_validation():
    with pytest.raises(InputError):
        TrialConfig(d=1, n=(4, 4), seed=0, trials=1)
    with pytest.raises(InputError):
        TrialConfig(d=2, n=(3, 3), seed=0, trials=1)
    with pytest.raises(InputError):
        TrialConfig(d=2, n=(6, 5), seed=0, trials=1)
    with pytest.raises(InputError):
        TrialConfig(d=2, n=(4, 4), seed=0, trials=0)


def test_verify_theorems_2d():
    pts = gen_polytope(TrialConfig(d=2, n=(8, 8), seed=11, trials=1), 0)
    rec = verify_theorems(pts, 2)
    assert rec.defects == ()
    assert rec.thm5_pass and rec.thm6_pass and rec.thm2_pass
    assert rec.census_identities_pass
    assert rec.dt_simplices == rec.udt_simplices == 6


def test_verify_theorems_3d():
    pts = gen_polytope(TrialConfig(d=3, n=(7, 7), seed=12, trials=1), 0)
    rec = verify_theorems(pts, 3)
    assert rec.defects == ()
    assert rec.bmd_ears >= 2 and rec.bmud_ears >= 2
    assert rec.bmd_ears + rec.bmud_ears >= 4
    assert set(rec.bmd_simplices) <= set(rec.d_ear_simplices)
    assert set(rec.bmud_simplices) <= set(rec.ud_ear_simplices)
    assert rec.census is None and rec.census_identities_pass is None


def test_run_trials_deterministic():
    cfg = TrialConfig(d=2, n=(5, 9), seed=13, trials=4)
    a = run_trials(cfg)
    b = run_trials(cfg)
    assert a.records == b.records
    assert a.best_points == b.best_points
    assert a.defect_count == 0


def test_min_bmd_monotone_in_trial_prefix():
    long = run_trials(TrialConfig(d=3, n=(6, 8), seed=14, trials=6))
    short = run_trials(TrialConfig(d=3, n=(6, 8), seed=14, trials=3))
    assert long.records[:3] == short.records
    assert long.min_bmd <= short.min_bmd


def test_search_rejects_2d():
    with pytest.raises(InputError):
        search_min_bm_ears(TrialConfig(d=2, n=(6, 6), seed=0, trials=1))


def test_search_best_instance_reverifies():
    rep = search_min_bm_ears(TrialConfig(d=3, n=(7, 8), seed=15, trials=5))
    assert rep.best_points is not None
    fresh = verify_theorems(
        rep.best_points, 3, seed=derive_seed(15, rep.best_trial)
    )
    assert fresh == rep.best_record
