import math

import pytest

from ypfa import (Disk, InputError, PhysicalConstants, PoleProximityError, PowerLawParams,
                  XiInputs, YukawaParams, disk_gravity_force, disk_power_force,
                  disk_yukawa_force, disk_yukawa_potential, oracle_disk_point, xi_gravity,
                  xi_power, xi_yukawa)
from ypfa.disk import AxisProbe, LogRatio

C = PhysicalConstants()


def probe(z=100e-9):
    return AxisProbe(z=z, mass=1.0)


def xi_inputs(disk, a=100e-9, radius=150e-6):
    return XiInputs(a=a, sphere_radius=radius, disk=disk)


# ----------------------------------------------------------------- gravity

def test_gravity_infinite_plane_limit():
    infinite = Disk(radius=math.inf, thickness=3.5e-6, density=2330.0)
    got = disk_gravity_force(probe(), infinite)
    want = -2 * math.pi * C.G * 2330.0 * 3.5e-6
    assert got == pytest.approx(want, rel=1e-15)
    # independent of the probe height
    assert disk_gravity_force(probe(1e-3), infinite) == got


def test_gravity_thin_disk_scales_linearly():
    thin = disk_gravity_force(probe(), Disk(300e-6, 1e-12, 2330.0))
    thinner = disk_gravity_force(probe(), Disk(300e-6, 0.5e-12, 2330.0))
    assert thin == pytest.approx(2 * thinner, rel=1e-9)


def test_gravity_against_quadrature(reference_disk):
    got = disk_gravity_force(probe(), reference_disk)
    report = oracle_disk_point(probe(), reference_disk, "newton")
    assert report.converged
    assert report.check_against(got) < 1e-9


def test_xi_gravity_gauss_law_invariance():
    assert xi_gravity(xi_inputs(Disk(math.inf, 3.5e-6, 2330.0))) == 1.0
    nearly_infinite = Disk(1e6 * 150e-6, 3.5e-6, 2330.0)
    assert abs(xi_gravity(xi_inputs(nearly_infinite)) - 1.0) <= 1e-5


def test_xi_gravity_reference_value(reference_disk):
    # a disk of twice the sphere radius: an order-300% near/far asymmetry
    value = xi_gravity(xi_inputs(reference_disk))
    assert 3.0 <= value <= 4.5


def test_xi_gravity_thin_disk_limit():
    # beta -> 0 tends to the thin-sheet field ratio, not to 1: the near and
    # far forces both vanish like D1 but with different sheet prefactors
    a, radius, rd = 100e-9, 150e-6, 300e-6
    thin = Disk(radius=rd, thickness=1e-9 * radius, density=2330.0)
    value = xi_gravity(xi_inputs(thin, a=a, radius=radius))

    def sheet(z):
        return 1.0 - z / math.sqrt(z * z + rd * rd)

    want = sheet(a) / sheet(a + 2 * radius)
    assert value == pytest.approx(want, rel=1e-9)


# --------------------------------------------------------------- power law

def test_power_n2_equals_gravity(reference_disk):
    got = disk_power_force(probe(), reference_disk, PowerLawParams(k=C.G, n=2.0))
    want = disk_gravity_force(probe(), reference_disk)
    assert got == pytest.approx(want, rel=1e-12)


def test_power_n3_infinite_plane_log_behavior():
    # for z << D1 the infinite-plane force behaves like ln(1 + D1^2/z^2)
    infinite = Disk(radius=math.inf, thickness=3.5e-6, density=2330.0)
    z = 3.5e-9
    got = disk_power_force(AxisProbe(z), infinite, PowerLawParams(k=1.0, n=3.0))
    behaves = -(math.pi * 2330.0 / 2.0) * math.log1p((3.5e-6 / z) ** 2)
    assert got == pytest.approx(behaves, rel=1e-3)


@pytest.mark.parametrize("n", [1.0, 1.5, 3.0, 4.0])
def test_power_against_quadrature(n, reference_disk):
    got = disk_power_force(probe(), reference_disk, PowerLawParams(k=C.G, n=n))
    report = oracle_disk_point(probe(), reference_disk, "power", n=n)
    assert report.converged
    assert report.check_against(got / C.G) < 1e-8


def test_power_pole_guard(reference_disk):
    for n in (1.0 + 1e-7, 1.0 - 1e-7, 3.0 + 5e-7, 3.0 - 1e-9):
        with pytest.raises(PoleProximityError):
            disk_power_force(probe(), reference_disk, PowerLawParams(k=1.0, n=n))
    # exactly at the poles the dedicated forms answer
    disk_power_force(probe(), reference_disk, PowerLawParams(k=1.0, n=1.0))
    disk_power_force(probe(), reference_disk, PowerLawParams(k=1.0, n=3.0))


def test_power_rejects_nonpositive_exponent():
    with pytest.raises(InputError):
        PowerLawParams(k=1.0, n=-2.0)


def test_power_infinite_plane_diverges_for_small_exponent():
    infinite = Disk(radius=math.inf, thickness=3.5e-6, density=2330.0)
    with pytest.raises(InputError):
        disk_power_force(probe(), infinite, PowerLawParams(k=1.0, n=0.5))
    with pytest.raises(InputError):
        disk_power_force(probe(), infinite, PowerLawParams(k=1.0, n=1.0))


def test_xi_power_consistency_and_trends(reference_disk):
    inputs = xi_inputs(reference_disk)
    assert xi_power(inputs, 2.0) == pytest.approx(xi_gravity(inputs), rel=1e-12)
    # above the Gauss-law exponent the near side wins even for finite disks
    assert xi_power(inputs, 3.0) > 1.0
    # well below it, with a large disk, the far side wins
    large = xi_inputs(Disk(100 * 150e-6, 3.5e-6, 2330.0))
    assert xi_power(large, 1.0) < 1.0


def test_xi_power_monotone_in_exponent(reference_disk):
    inputs = xi_inputs(reference_disk)
    previous = None
    for i in range(50):
        n = 1.0 + 3.0 * i / 49.0
        if abs(n - 1.0) <= 1e-6:
            n = 1.0
        if abs(n - 3.0) <= 1e-6:
            n = 3.0
        value = xi_power(inputs, n)
        if previous is not None:
            assert value > previous, f"n={n}"
        previous = value


# ------------------------------------------------------------------ yukawa

def test_yukawa_force_infinite_plane_reduction():
    infinite = Disk(radius=math.inf, thickness=3.5e-6, density=2330.0)
    lam = 1e-7
    got = disk_yukawa_force(probe(), infinite, YukawaParams(1.0, lam))
    want = (-2 * math.pi * C.G * 2330.0 * lam * math.exp(-1e-7 / lam)
            * -math.expm1(-3.5e-6 / lam))
    assert got == pytest.approx(want, rel=1e-15)


def test_yukawa_potential_infinite_plane_reduction():
    infinite = Disk(radius=math.inf, thickness=3.5e-6, density=2330.0)
    lam = 1e-7
    got = disk_yukawa_potential(probe(), infinite, YukawaParams(1.0, lam))
    want = (-2 * math.pi * C.G * 2330.0 * lam * lam * math.exp(-1e-7 / lam)
            * -math.expm1(-3.5e-6 / lam))
    assert got == pytest.approx(want, rel=1e-15)


def test_yukawa_thin_disk_vanishes(reference_disk):
    thin = Disk(300e-6, 1e-12, 2330.0)
    p = YukawaParams(1.0, 1e-7)
    full = disk_yukawa_force(probe(), reference_disk, p)
    assert abs(disk_yukawa_force(probe(), thin, p)) < abs(full) * 1e-5


def test_yukawa_force_and_potential_against_quadrature(reference_disk):
    p = YukawaParams(1.0, 50e-6)
    got_f = disk_yukawa_force(probe(), reference_disk, p)
    report = oracle_disk_point(probe(), reference_disk, "yukawa", p=p)
    assert report.check_against(got_f) < 1e-8
    got_u = disk_yukawa_potential(probe(), reference_disk, p)
    report = oracle_disk_point(probe(), reference_disk, "yukawa_potential", p=p)
    assert report.check_against(got_u) < 1e-8


def test_yukawa_force_is_potential_gradient(reference_disk):
    # the named finite-difference configuration: z = 100 nm, lam = 100 um
    p = YukawaParams(1.0, 100e-6)
    z = 100e-9
    h = z * 1e-5
    up = disk_yukawa_potential(AxisProbe(z + h), reference_disk, p)
    down = disk_yukawa_potential(AxisProbe(z - h), reference_disk, p)
    gradient_force = -(up - down) / (2 * h)
    assert gradient_force == pytest.approx(
        disk_yukawa_force(AxisProbe(z), reference_disk, p), rel=1e-8)


def test_yukawa_edge_corrections_bound():
    # at R_d = 50 lam the edge terms are suppressed below e^(-45), checked
    # on the exponent (log space): the factor itself may underflow
    lam = 1e-6
    disk = Disk(radius=50 * lam, thickness=3.5e-6, density=2330.0)
    z = 100e-9
    s_near = math.sqrt(z * z + disk.radius ** 2)
    exponent = disk.radius ** 2 / ((z + s_near) * lam)
    assert exponent > 45.0


def test_xi_yukawa_infinite_plane_value():
    infinite = Disk(radius=math.inf, thickness=3.5e-6, density=2330.0)
    result = xi_yukawa(xi_inputs(infinite), YukawaParams(1.0, 0.1e-6))
    assert result.ln_value == 2 * 150e-6 / 0.1e-6 == 3000.0


def test_xi_yukawa_finite_disk_still_3000(reference_disk):
    result = xi_yukawa(xi_inputs(reference_disk), YukawaParams(1.0, 0.1e-6))
    assert result.ln_value == pytest.approx(3000.0, rel=1e-9)


def test_xi_yukawa_insensitive_to_disk_radius_at_short_range():
    lam = 1e-6
    near = xi_yukawa(xi_inputs(Disk(2 * 150e-6, 3.5e-6, 2330.0)), YukawaParams(1.0, lam))
    far = xi_yukawa(xi_inputs(Disk(100 * 150e-6, 3.5e-6, 2330.0)), YukawaParams(1.0, lam))
    scale = 2 * 150e-6 / lam
    assert abs(near.ln_value - far.ln_value) / scale <= 1e-6


def test_xi_yukawa_long_range_limit():
    infinite = Disk(radius=math.inf, thickness=3.5e-6, density=2330.0)
    result = xi_yukawa(xi_inputs(infinite), YukawaParams(1.0, 1.0))
    assert result.ln_value == 2 * 150e-6 / 1.0  # -> 0 as lam grows


def test_xi_yukawa_radius_dependence_at_long_range(reference_disk):
    # at lam = 1000 um the disk radius visibly matters
    lam = 1000e-6
    small = xi_yukawa(xi_inputs(Disk(150e-6, 3.5e-6, 2330.0)), YukawaParams(1.0, lam))
    large = xi_yukawa(xi_inputs(Disk(100 * 150e-6, 3.5e-6, 2330.0)), YukawaParams(1.0, lam))
    assert abs(small.ln_value - large.ln_value) > 0.1


def test_log_ratio_representation():
    assert LogRatio(1.5).ratio() == pytest.approx(math.exp(1.5), rel=1e-15)
    assert LogRatio(3000.0).ratio() == math.inf
