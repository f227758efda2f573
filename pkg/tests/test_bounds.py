"""Certificate checks, bound evaluators, and their consistency identities."""

import numpy as np
import pytest

from numrad.bounds import (
    ACCRETIVE,
    OPERATOR_ORDER,
    DiskCertificate,
    DegenerateSector,
    InvalidInterval,
    InvalidRho,
    InvalidSector,
    SectorPair,
    ZeroOperator,
    check_disk,
    check_sector_hypothesis,
    eval_disk_bound,
    eval_disk_gap_squared,
    eval_disk_gap_weighted,
    eval_radius_ratio,
    eval_sector_gap,
    eval_sector_gap_weighted,
    eval_sector_ratio,
    eval_segment_bounds,
    optimize_lambda,
    sector_to_disk,
    verify_all,
)
from numrad.extremal import (
    gen_disk_instance,
    gen_segment_instance,
    ginibre,
    shift2,
)
from numrad.linalg import operator_norm
from numrad.numrange import numerical_radius


def svd2_max(m):
    """Largest singular value of a 2x2 matrix from the characteristic
    polynomial of M*M (quadratic formula), independent of the LAPACK path."""
    g = m.conj().T @ m
    tr = g[0, 0].real + g[1, 1].real
    det = (g[0, 0] * g[1, 1] - g[0, 1] * g[1, 0]).real
    disc = max(tr * tr / 4.0 - det, 0.0)
    return float(np.sqrt(tr / 2.0 + np.sqrt(disc)))


def rand_matrix(rng, n):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


# ------------------------------------------------------------- certificates


def test_certificate_validation():
    with pytest.raises(ValueError):
        DiskCertificate(lam=0.0, r=1.0)
    with pytest.raises(ValueError):
        DiskCertificate(lam=1.0, r=0.0)
    with pytest.raises(ValueError):
        DiskCertificate(lam=1.0, r=-2.0)
    with pytest.raises(InvalidRho):
        DiskCertificate(lam=1.0, r=1.0, rho=-0.1)
    cert = DiskCertificate(lam=1 + 2j, r=0.5, rho=0.25)
    assert cert.lam == 1 + 2j and cert.r == 0.5 and cert.rho == 0.25


def test_sector_pair_modes_and_segment():
    with pytest.raises(ValueError):
        SectorPair(phi=1.0, varphi=2.0, mode="bogus")
    s = SectorPair.from_segment(1.0, 4.0)
    assert s.mode == OPERATOR_ORDER
    assert s.segment() == (1.0, 4.0)
    assert SectorPair(phi=1 + 1j, varphi=1 - 1j).segment() is None


# --------------------------------------------------------------- check_disk


def test_check_disk_trivial_center():
    ok, measured = check_disk(2.0 * np.eye(3), DiskCertificate(lam=2.0, r=0.1))
    assert ok and measured <= 1e-12


def test_check_disk_shift2_tight_fails():
    ok, measured = check_disk(shift2(), DiskCertificate(lam=1.0, r=1.0))
    assert not ok
    assert abs(measured - svd2_max(shift2() - np.eye(2))) <= 1e-12
    assert abs(measured - 1.618033988749895) <= 1e-9


def test_check_disk_shift2_loose_passes():
    ok, _ = check_disk(shift2(), DiskCertificate(lam=1.0, r=2.0))
    assert ok


# ------------------------------------------------------------ sector checks


def test_sector_hypothesis_endpoints_annihilate():
    s = SectorPair(phi=2.0, varphi=1.0, mode=OPERATOR_ORDER)
    ok, min_eig = check_sector_hypothesis(np.diag([1.0, 2.0]), s)
    assert ok and abs(min_eig) <= 1e-12


def test_sector_hypothesis_spectrum_outside_fails():
    s = SectorPair(phi=2.0, varphi=1.0)
    ok, min_eig = check_sector_hypothesis(np.diag([0.0, 3.0]), s)
    assert not ok
    assert abs(min_eig - (-2.0)) <= 1e-12


def test_sector_hypothesis_constructed_segment():
    for seed in range(5):
        a, s = gen_segment_instance(1.0, 4.0, 5, seed)
        ok, min_eig = check_sector_hypothesis(a, s)
        assert ok and min_eig >= -1e-9


def test_sector_order_mode_rejects_nonnormal():
    # accretive holds but B is far from self-adjoint
    rng = np.random.default_rng(0)
    a = np.diag([1.0, 2.0]) + 0.05 * rand_matrix(rng, 2)
    s_acc = SectorPair(phi=4.0, varphi=0.1, mode=ACCRETIVE)
    s_ord = SectorPair(phi=4.0, varphi=0.1, mode=OPERATOR_ORDER)
    assert check_sector_hypothesis(a, s_acc)[0]
    assert not check_sector_hypothesis(a, s_ord)[0]


def test_sector_to_disk():
    c = sector_to_disk(SectorPair(phi=2.0, varphi=1.0))
    assert c.lam == 1.5 and c.r == 0.5
    c = sector_to_disk(SectorPair(phi=1 + 1j, varphi=1 - 1j))
    assert c.lam == 1.0 and abs(c.r - 1.0) <= 1e-15
    c = sector_to_disk(SectorPair.from_segment(1.0, 4.0))
    assert c.lam == 2.5 and c.r == 1.5
    with pytest.raises(DegenerateSector):
        sector_to_disk(SectorPair(phi=1.0, varphi=1.0))
    with pytest.raises(DegenerateSector):
        sector_to_disk(SectorPair(phi=1.0, varphi=-1.0))


# ---------------------------------------------------------- disk evaluators


def test_disk_bound_scalar_matrix():
    rep_gap, rep_sq = eval_disk_bound(np.eye(2), DiskCertificate(lam=1.0, r=0.1))
    assert rep_gap.hypothesis_ok
    assert abs(rep_gap.lhs) <= 1e-12
    assert abs(rep_gap.rhs - 0.005) <= 1e-15
    assert rep_sq.slack >= 0


def test_disk_bound_shift2():
    rep_gap, rep_sq = eval_disk_bound(shift2(), DiskCertificate(lam=1.0, r=2.0))
    assert rep_gap.hypothesis_ok
    assert abs(rep_gap.lhs - 0.5) <= 1e-9
    assert abs(rep_gap.rhs - 2.0) <= 1e-15
    assert abs(rep_sq.lhs - 2.0) <= 1e-9
    assert abs(rep_sq.rhs - 5.0) <= 1e-9


def test_disk_bound_failed_hypothesis_is_data():
    rep_gap, rep_sq = eval_disk_bound(shift2(), DiskCertificate(lam=1.0, r=1.0))
    assert not rep_gap.hypothesis_ok and not rep_sq.hypothesis_ok
    assert "hypothesis failed" in rep_gap.diagnostic


def test_gap_squared_scalar_matrix():
    rep = eval_disk_gap_squared(np.eye(2), DiskCertificate(lam=1.0, r=0.3, rho=0.0))
    assert rep.inequality_id == "C2_13"
    assert rep.hypothesis_ok
    assert abs(rep.lhs) <= 1e-12
    assert abs(rep.rhs - 0.09) <= 1e-15


def test_gap_squared_shift2_center_at_radius():
    # center |lambda| = w(S2) = 0.5; measured distance is the certified radius
    r = operator_norm(shift2() - 0.5 * np.eye(2))
    assert abs(r - svd2_max(shift2() - 0.5 * np.eye(2))) <= 1e-12
    rep = eval_disk_gap_squared(shift2(), DiskCertificate(lam=0.5, r=r + 1e-12, rho=0.0))
    assert rep.hypothesis_ok
    assert abs(rep.lhs - 0.75) <= 1e-9
    assert rep.slack >= 0
    # auto mode recognizes the coincidence and reports the special case
    auto = eval_disk_gap_squared(shift2(), DiskCertificate(lam=0.5, r=r + 1e-12))
    assert auto.inequality_id == "R2_15"
    assert abs(auto.rhs - (r + 1e-12) ** 2) <= 1e-15


def test_gap_squared_overclaimed_rho_fails():
    rep = eval_disk_gap_squared(np.eye(2), DiskCertificate(lam=2.0, r=1.5, rho=1.5))
    assert not rep.hypothesis_ok  # | |lambda| - w | = 1 < claimed 1.5


def test_gap_squared_auto_rho_away_from_center():
    rep = eval_disk_gap_squared(np.eye(2), DiskCertificate(lam=2.0, r=1.5))
    assert rep.inequality_id == "C2_13"
    assert rep.hypothesis_ok
    assert abs(rep.rhs - (1.5**2 - 1.0)) <= 1e-9


def test_radius_ratio_identity():
    rep_root, rep_sq = eval_radius_ratio(np.eye(2), DiskCertificate(lam=1.0, r=0.5))
    assert rep_root.hypothesis_ok
    assert abs(rep_root.lhs - np.sqrt(0.75)) <= 1e-15
    assert abs(rep_root.rhs - 1.0) <= 1e-9
    assert rep_root.refinement_flag is True
    assert rep_sq.slack >= 0


def test_radius_ratio_constructed_perturbation():
    rng = np.random.default_rng(1)
    c = ginibre(3, rng)
    c /= operator_norm(c)
    t = np.eye(3) + 0.1 * c
    rep_root, rep_sq = eval_radius_ratio(t, DiskCertificate(lam=1.0, r=0.1))
    assert rep_root.hypothesis_ok
    assert rep_root.slack >= -1e-8
    assert rep_sq.slack >= -1e-8


def test_radius_ratio_needs_center_larger_than_radius():
    rep_root, _ = eval_radius_ratio(np.eye(2), DiskCertificate(lam=1.0, r=1.0))
    assert not rep_root.hypothesis_ok


def test_radius_ratio_zero_operator_raises():
    with pytest.raises(ZeroOperator):
        eval_radius_ratio(np.zeros((2, 2)), DiskCertificate(lam=1.0, r=0.5))


def test_refinement_flag_threshold_is_exact():
    lam = 2.0
    r_at = lam * np.sqrt(3.0) / 2.0
    rep, _ = eval_radius_ratio(np.eye(2), DiskCertificate(lam=lam, r=r_at))
    assert rep.refinement_flag is True
    rep, _ = eval_radius_ratio(np.eye(2), DiskCertificate(lam=lam, r=np.nextafter(r_at, 4.0)))
    assert rep.refinement_flag is False


def test_weighted_gap_scalar_matrix():
    rep = eval_disk_gap_weighted(3.0 * np.eye(2), DiskCertificate(lam=3.0, r=0.5))
    assert rep.hypothesis_ok
    assert abs(rep.lhs) <= 1e-9
    assert rep.rhs >= 0


def test_weighted_gap_constructed_perturbation():
    rng = np.random.default_rng(2)
    c = ginibre(3, rng)
    c /= operator_norm(c)
    rep = eval_disk_gap_weighted(np.eye(3) + 0.3 * c, DiskCertificate(lam=1.0, r=0.3))
    assert rep.hypothesis_ok
    assert rep.slack >= -1e-8


def test_weighted_gap_requires_center_larger_than_radius():
    rep = eval_disk_gap_weighted(shift2(), DiskCertificate(lam=1.0, r=2.0))
    assert not rep.hypothesis_ok


# -------------------------------------------------------- sector evaluators


def test_sector_gap_diagonal():
    rep = eval_sector_gap(np.diag([1.0, 2.0]), SectorPair(phi=2.0, varphi=1.0, mode=OPERATOR_ORDER))
    assert rep.hypothesis_ok
    assert abs(rep.lhs) <= 1e-9
    assert abs(rep.rhs - 1.0 / 12.0) <= 1e-15


def test_sector_gap_segment_14():
    rep = eval_sector_gap(np.diag([1.0, 4.0]), SectorPair.from_segment(1.0, 4.0))
    assert rep.hypothesis_ok
    assert abs(rep.rhs - 0.45) <= 1e-15


def test_sector_gap_random_segment_instances():
    for seed in range(5):
        a, s = gen_segment_instance(1.0, 4.0, 4, seed)
        rep = eval_sector_gap(a, s)
        assert rep.hypothesis_ok
        assert rep.slack >= -1e-8


def test_sector_ratio_diagonal_cases():
    rep_root, rep_sq = eval_sector_ratio(
        np.diag([1.0, 4.0]), SectorPair.from_segment(1.0, 4.0)
    )
    assert rep_root.hypothesis_ok
    assert abs(rep_root.lhs - 0.8) <= 1e-15
    assert abs(rep_root.rhs - 1.0) <= 1e-9
    assert rep_sq.slack >= -1e-8

    rep_root, _ = eval_sector_ratio(
        np.diag([1.0, 2.0]), SectorPair(phi=2.0, varphi=1.0, mode=OPERATOR_ORDER)
    )
    assert abs(rep_root.lhs - 2.0 * np.sqrt(2.0) / 3.0) <= 1e-15


def test_sector_ratio_invalid_sector():
    with pytest.raises(InvalidSector):
        eval_sector_ratio(np.eye(2), SectorPair(phi=-1.0, varphi=1.0))


def test_sector_weighted_gap():
    rep = eval_sector_gap_weighted(np.diag([1.0, 4.0]), SectorPair.from_segment(1.0, 4.0))
    assert rep.hypothesis_ok
    assert abs(rep.lhs) <= 1e-8
    assert abs(rep.rhs - 4.0) <= 1e-9

    rep = eval_sector_gap_weighted(np.diag([1.0, 2.0]), SectorPair.from_segment(1.0, 2.0))
    assert abs(rep.rhs - (3.0 - 2.0 * np.sqrt(2.0)) * 2.0) <= 1e-9

    for seed in range(3):
        a, s = gen_segment_instance(0.5, 3.0, 4, seed)
        rep = eval_sector_gap_weighted(a, s)
        assert rep.hypothesis_ok and rep.slack >= -1e-8


def test_segment_bounds_diagonal():
    reps = eval_segment_bounds(np.diag([1.0, 4.0]), SectorPair.from_segment(1.0, 4.0))
    by_id = {rep.inequality_id: rep for rep in reps}
    assert set(by_id) == {"R4_9", "R4_10", "R4_11", "R4_12"}
    assert abs(by_id["R4_9"].lhs - 1.0) <= 1e-9
    assert by_id["R4_9"].rhs == 1.25
    assert by_id["R4_12"].rhs == 0.45
    assert all(rep.hypothesis_ok and rep.slack >= -1e-8 for rep in reps)


def test_segment_bounds_accretive_nonnormal():
    # Hermitian core with interior spectrum plus a small non-normal bump;
    # the margin keeps the accretivity hypothesis intact.
    rng = np.random.default_rng(3)
    a, _ = gen_segment_instance(1.5, 3.5, 4, 11)
    k = ginibre(4, rng)
    a = a + 0.02 * k / operator_norm(k)
    s = SectorPair.from_segment(1.0, 4.0, mode=ACCRETIVE)
    ok, _ = check_sector_hypothesis(a, s)
    assert ok
    reps = eval_segment_bounds(a, s)
    assert all(rep.hypothesis_ok for rep in reps)
    assert all(rep.slack >= -1e-8 for rep in reps)


def test_segment_bounds_invalid_intervals():
    with pytest.raises(InvalidInterval):
        eval_segment_bounds(np.eye(2), SectorPair.from_segment(-1.0, 4.0))
    with pytest.raises(InvalidInterval):
        eval_segment_bounds(np.eye(2), SectorPair(phi=1.0, varphi=4.0))  # M < m
    with pytest.raises(InvalidInterval):
        eval_segment_bounds(np.eye(2), SectorPair(phi=1 + 1j, varphi=1 - 1j))


# ------------------------------------------------------------- verify_all


def test_verify_all_routing_disk():
    reps = verify_all(np.eye(2), [DiskCertificate(lam=1.0, r=0.5)])
    # |lambda| coincides with w here, so the squared-gap report lands on the
    # special case R2_15 instead of C2_13
    assert [rep.inequality_id for rep in reps] == ["T2_2", "E2_4", "R2_15", "T3_2", "R3_5", "T4_2"]
    reps = verify_all(np.eye(2), [DiskCertificate(lam=2.0, r=1.5)])
    assert [rep.inequality_id for rep in reps] == ["T2_2", "E2_4", "C2_13", "T3_2", "R3_5", "T4_2"]
    assert all(rep.hypothesis_ok for rep in reps)
    assert all(rep.slack >= -1e-8 for rep in reps)


def test_verify_all_empty():
    assert verify_all(np.eye(2), []) == []


def test_verify_all_failing_cert_reports_everything():
    reps = verify_all(shift2(), [DiskCertificate(lam=1.0, r=1.0)])
    assert len(reps) == 6
    assert all(not rep.hypothesis_ok for rep in reps)


def test_verify_all_sector_routing_and_order():
    a, s = gen_segment_instance(1.0, 4.0, 3, 0)
    reps = verify_all(a, [s, sector_to_disk(s)])
    ids = [rep.inequality_id for rep in reps]
    assert ids == sorted(ids, key=lambda i: ["T2_2", "E2_4", "C2_7", "C2_13", "R2_15",
                                             "T3_2", "R3_5", "C3_6", "C3_7", "T4_2",
                                             "C4_6", "R4_9", "R4_10", "R4_11", "R4_12"].index(i))
    assert {"C2_7", "C3_6", "C3_7", "C4_6", "R4_9", "R4_10", "R4_11", "R4_12"} <= set(ids)
    assert all(rep.slack >= -1e-8 for rep in reps if rep.hypothesis_ok)


def test_verify_all_zero_operator_skips_ratios():
    reps = verify_all(np.zeros((2, 2)), [DiskCertificate(lam=1.0, r=0.5)])
    ids = {rep.inequality_id for rep in reps}
    assert "T3_2" not in ids and "T4_2" not in ids
    assert "T2_2" in ids


# ------------------------------------------------------ consistency checks


def test_sector_gap_matches_disk_route():
    rng = np.random.default_rng(4)
    for seed in range(10):
        a, s = gen_segment_instance(0.8, 3.0, 3, seed)
        # rotate to a genuinely complex pair; the hypothesis is invariant
        ph = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
        a2 = ph * a
        s2 = SectorPair(phi=ph * s.phi, varphi=ph * s.varphi, mode=s.mode)
        w = numerical_radius(a2)
        nrm = operator_norm(a2)
        rep_sector = eval_sector_gap(a2, s2, w=w, norm=nrm)
        rep_disk, _ = eval_disk_bound(a2, sector_to_disk(s2), w=w, norm=nrm)
        assert rep_sector.lhs == rep_disk.lhs
        assert abs(rep_sector.rhs - rep_disk.rhs) <= 1e-12
        assert rep_sector.hypothesis_ok and rep_disk.hypothesis_ok


def test_sector_disk_identity():
    rng = np.random.default_rng(5)
    for _ in range(50):
        phi = complex(rng.standard_normal(), rng.standard_normal())
        varphi = complex(rng.standard_normal(), rng.standard_normal())
        if phi in (varphi, -varphi):
            continue
        cert = sector_to_disk(SectorPair(phi=phi, varphi=varphi))
        lhs = abs(cert.lam) ** 2 - cert.r**2
        assert abs(lhs - (phi * np.conj(varphi)).real) <= 1e-12


def test_gap_chain_identity():
    # T2_2 slack equals (E2_4 slack + (norm - |lambda|)^2) / (2 |lambda|)
    for seed in range(10):
        t, cert = gen_disk_instance(1.0 + 0.5j, 0.4, 4, seed)
        rep_gap, rep_sq = eval_disk_bound(t, cert)
        alam = abs(cert.lam)
        derived = (rep_sq.slack + (rep_gap.norm - alam) ** 2) / (2.0 * alam)
        assert abs(rep_gap.slack - derived) <= 1e-9
        assert rep_sq.slack >= -1e-8 and rep_gap.slack >= -1e-8


def test_rhs_monotone_in_radius():
    t, _ = gen_disk_instance(2.0, 0.1, 3, 0)
    w = numerical_radius(t)
    nrm = operator_norm(t)
    last = {"T2_2": -np.inf, "R3_5": -np.inf, "T4_2": -np.inf}
    for r in np.linspace(0.1, 1.9, 10):
        cert = DiskCertificate(lam=2.0, r=float(r))
        rep_gap, _ = eval_disk_bound(t, cert, w=w, norm=nrm)
        _, rep_sq = eval_radius_ratio(t, cert, w=w, norm=nrm)
        rep_wt = eval_disk_gap_weighted(t, cert, w=w, norm=nrm)
        for rep in (rep_gap, rep_sq, rep_wt):
            assert rep.rhs >= last[rep.inequality_id]
            last[rep.inequality_id] = rep.rhs


def test_soundness_mini_sweep():
    violations = 0
    for seed in range(40):
        t, cert = gen_disk_instance(1.0, 0.5, 3, seed)
        for rep in verify_all(t, [cert]):
            if rep.hypothesis_ok and rep.slack < -1e-8:
                violations += 1
    for seed in range(40):
        a, s = gen_segment_instance(0.5, 2.5, 3, seed)
        for rep in verify_all(a, [s]):
            if rep.hypothesis_ok and rep.slack < -1e-8:
                violations += 1
    assert violations == 0


# ---------------------------------------------------------- optimize_lambda


def test_optimize_lambda_two_point_spectrum():
    # for a diagonal matrix the distance is max_i |d_i - lambda|, whose
    # minimizer over {0, 1} is the midpoint (smallest enclosing disk)
    cert = optimize_lambda(np.diag([0.0, 1.0]))
    assert abs(cert.lam - 0.5) <= 1e-6
    assert abs(cert.r - 0.5) <= 1e-6
    ok, _ = check_disk(np.diag([0.0, 1.0]), cert)
    assert ok


def test_optimize_lambda_scalar_matrix():
    cert = optimize_lambda(0.7 * np.eye(3))
    assert abs(cert.lam - 0.7) <= 1e-6
    assert cert.r <= 1e-6
    assert cert.lam != 0


def test_optimize_lambda_shift2_no_worse_than_origin():
    cert = optimize_lambda(shift2())
    baseline = operator_norm(shift2())  # distance at the origin
    assert cert.r <= baseline + 1e-6
    assert cert.lam != 0
    ok, _ = check_disk(shift2(), cert)
    assert ok
