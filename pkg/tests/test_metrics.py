"""Densities: closed forms, domains, pullbacks, and the Ahlfors grid bound."""
import math

import numpy as np
import pytest
from mpmath import mp

from hypmetrics.domains import DomainModel
from hypmetrics.errors import BadParameter, OutsideDomain, SingularPoint
from hypmetrics.maps import example1_map, identity_map, mobius_map, phi_map, square_map
from hypmetrics.metrics import (annulus_metric, conical_metric,
                                conical_scaled_metric, density_at, disk_metric,
                                eval_many, half_plane_metric, log_density_at,
                                pullback, punctured_disk_metric,
                                punctured_disk_metric_r, strip_metric)
from hypmetrics.sampling import cartesian_grid, polar_grid, sample_annular

mp.dps = 40


def test_disk_density_at_origin():
    assert density_at(disk_metric(), 0.0) == 1.0


def test_punctured_disk_density_high_precision_oracle():
    # independent oracle: evaluate 1/(2|z| log(1/|z|)) at |z| = 1/e in mpmath
    expected = float(1 / (2 * mp.exp(-1) * mp.log(mp.exp(1))))
    got = density_at(punctured_disk_metric(), complex(math.exp(-1), 0.0))
    assert got == pytest.approx(expected, rel=1e-15)
    assert got == pytest.approx(math.e / 2, rel=1e-15)


def test_conical_density_hand_value():
    # (1-a) |z|^-a / (1 - |z|^(2(1-a))) at a=1/2, z=1/4:
    # (1/2) * 2 / (1 - (1/4)^1) = 4/3
    expected = float(mp.mpf(1) / 2 * (mp.mpf(1) / 4) ** (mp.mpf(-1) / 2)
                     / (1 - (mp.mpf(1) / 4) ** 1))
    assert expected == pytest.approx(4.0 / 3.0, rel=1e-30)
    assert density_at(conical_metric(0.5), 0.25) == pytest.approx(4.0 / 3.0, rel=1e-14)


def test_annulus_density_closed_form_simplification():
    # r = e^-pi, |z| = e^-pi/2: the sine factor is sin(pi/2) = 1,
    # so lambda = e^(pi/2)/2
    r = math.exp(-math.pi)
    z = complex(math.exp(-math.pi / 2.0), 0.0)
    assert density_at(annulus_metric(r), z) == pytest.approx(math.exp(math.pi / 2) / 2,
                                                             rel=1e-13)


def test_punctured_disk_R_restriction():
    lam_e = punctured_disk_metric_r(math.e)
    z = 0.3
    expected = 1.0 / (2.0 * z * (1.0 - math.log(z)))
    assert density_at(lam_e, z) == pytest.approx(expected, rel=1e-15)
    # R = 1 recovers the punctured disk density
    lam_1 = punctured_disk_metric_r(1.0)
    assert density_at(lam_1, 0.37) == pytest.approx(
        density_at(punctured_disk_metric(), 0.37), rel=1e-15)


def test_half_plane_and_strip_densities():
    assert density_at(half_plane_metric(), 2j) == pytest.approx(0.25, rel=1e-15)
    # mid-strip value pi/(2h)
    h = 2.0
    assert density_at(strip_metric(h), 1j) == pytest.approx(math.pi / (2 * h), rel=1e-15)


def test_domain_errors():
    with pytest.raises(SingularPoint):
        density_at(punctured_disk_metric(), 0.0)
    with pytest.raises(OutsideDomain):
        density_at(disk_metric(), 1.5)
    with pytest.raises(OutsideDomain):
        density_at(annulus_metric(0.5), 0.3)
    with pytest.raises(BadParameter):
        DomainModel.annulus(1.2)
    with pytest.raises(BadParameter):
        conical_metric(1.0)
    with pytest.raises(BadParameter):
        conical_scaled_metric(0.5, 0.0)


def test_log_density_matches_log_of_density():
    metrics = [disk_metric(), punctured_disk_metric(), annulus_metric(0.5),
               conical_metric(0.3), punctured_disk_metric_r(2.0),
               conical_scaled_metric(0.4, 0.7)]
    for m in metrics:
        for z in sample_annular(7, 20, 0.55, 0.9):
            if not m.domain.contains(z):
                continue
            assert log_density_at(m, z) == pytest.approx(
                math.log(density_at(m, z)), abs=1e-12)


def test_log_density_deep_in_the_puncture():
    # direct eval overflows no sooner than the log form; check consistency
    # at a depth where both still work, and finiteness much deeper
    m = punctured_disk_metric()
    z = 1e-150
    assert log_density_at(m, z) == pytest.approx(math.log(density_at(m, z)), rel=1e-12)
    assert np.isfinite(log_density_at(m, 1e-300))


def test_pullback_identity_and_square():
    lam = disk_metric()
    assert density_at(pullback(lam, identity_map(), lam.domain), 0.3) == \
        pytest.approx(1.0 / 0.91, rel=1e-15)
    got = density_at(pullback(lam, square_map(), lam.domain), 0.5)
    assert got == pytest.approx(1.0 / 0.9375, rel=1e-15)  # lambda_D(1/4) * |2 z|


def test_pullback_example1_matches_ratio_formula():
    # independent route: the closed-form distortion ratio times the density
    pd = punctured_disk_metric()
    pulled = pullback(pd, example1_map(), pd.domain)
    z = mp.mpf(1) / 2
    f = z * mp.exp(-(1 + z) / (1 - z))
    ratio = (abs(1 - 4 * z + z * z) / abs(1 - z) ** 2
             * mp.log(1 / z) / mp.log(1 / f))
    expected = float(ratio / (2 * z * mp.log(1 / z)))
    assert density_at(pulled, 0.5) == pytest.approx(expected, rel=1e-13)


def test_pullback_degenerate_point_gives_zero_density():
    lam = disk_metric()
    assert density_at(pullback(lam, square_map(), lam.domain), 0.0) == 0.0


def test_pullback_outside_domain_detection():
    # phi(D) does not stay inside the annulus: evaluation must flag the
    # wrong caller assertion
    pulled = pullback(annulus_metric(0.5), phi_map(), DomainModel.disk())
    with pytest.raises(OutsideDomain):
        pulled.eval(complex(-0.7, 0.0))


def test_domain_monotonicity_of_densities():
    # lambda_D <= lambda_pdisk <= lambda_annulus on the annulus
    disk, pd, ann = disk_metric(), punctured_disk_metric(), annulus_metric(0.5)
    pts = sample_annular(11, 200, 0.55, 0.95)
    ld, lp, la = eval_many(disk, pts), eval_many(pd, pts), eval_many(ann, pts)
    assert np.all(ld <= lp * (1 + 1e-14))
    assert np.all(lp <= la * (1 + 1e-14))


@pytest.mark.parametrize("map_", [identity_map(), square_map(), phi_map(),
                                  mobius_map(0.3 + 0.2j)])
def test_ahlfors_bound_for_disk_self_maps(map_):
    lam = disk_metric()
    pulled = pullback(lam, map_, lam.domain)
    grid = cartesian_grid(50, 0.97)
    grid = grid[np.abs(grid) < 0.97]
    ratios = eval_many(pulled, grid) / eval_many(lam, grid)
    assert float(ratios.max()) <= 1.0 + 1e-12


def test_holomorphic_map_derivatives_match_finite_differences():
    h = 1e-5
    for m in [phi_map(), example1_map(), square_map(), mobius_map(0.3 + 0.2j)]:
        for z in sample_annular(3, 25, 0.1, 0.7):
            fd = (m.value(z + h) - m.value(z - h)) / (2.0 * h)
            exact = m.derivative(z)
            assert abs(fd - exact) <= 1e-6 * max(1.0, abs(exact))


def test_grids_are_deterministic():
    assert np.array_equal(polar_grid(10, 0.1, 0.9), polar_grid(10, 0.1, 0.9))
    assert np.array_equal(sample_annular(5, 10, 0.1, 0.9),
                          sample_annular(5, 10, 0.1, 0.9))
