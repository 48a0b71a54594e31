import math

import pytest
from hypothesis import given, strategies as st

from ypfa import (INFINITE, CurvatureRadii, Disk, InputError, Layer, LayeredSphere,
                  PhysicalConstants, PowerLawParams, YukawaParams, effective_radius,
                  to_si_density)
from ypfa.config import format_si, parse_config_text, parse_quantity


def test_to_si_density_examples():
    assert to_si_density(19.28, "g_per_cm3") == 19280.0
    assert to_si_density(0.0, "g_per_cm3") == 0.0
    assert to_si_density(2.33, "g_per_cm3") == 2330.0
    assert to_si_density(2330.0, "kg_per_m3") == 2330.0


def test_to_si_density_rejects_bad_input():
    with pytest.raises(InputError):
        to_si_density(-1.0, "g_per_cm3")
    with pytest.raises(InputError):
        to_si_density(1.0, "stone_per_firkin")


def test_effective_radius_examples():
    assert effective_radius(CurvatureRadii(150e-6, 150e-6)) == 150e-6
    assert effective_radius(CurvatureRadii(100e-6, 225e-6)) == pytest.approx(150e-6, rel=1e-15)
    assert effective_radius(CurvatureRadii(151.3e-6, 151.3e-6)) == pytest.approx(
        151.3e-6, rel=1e-15)


@given(st.floats(min_value=1e-9, max_value=1e3), st.floats(min_value=1e-9, max_value=1e3))
def test_effective_radius_symmetric(rx, ry):
    assert effective_radius(CurvatureRadii(rx, ry)) == effective_radius(CurvatureRadii(ry, rx))


def test_effective_radius_rejects_nonpositive():
    with pytest.raises(InputError):
        CurvatureRadii(0.0, 1.0)
    with pytest.raises(InputError):
        CurvatureRadii(1.0, -2.0)


def test_type_invariants():
    with pytest.raises(InputError):
        PhysicalConstants(G=0.0)
    with pytest.raises(InputError):
        YukawaParams(alpha=1.0, lam=0.0)
    with pytest.raises(InputError):
        Layer(thickness=-1e-9, density=1000.0)
    with pytest.raises(InputError):
        LayeredSphere(core_radius=0.0, core_density=1.0)
    with pytest.raises(InputError):
        Disk(radius=1e-6, thickness=0.0, density=1.0)
    with pytest.raises(InputError):
        PowerLawParams(k=1.0, n=0.0)
    # alpha may be any real, including negative and zero
    YukawaParams(alpha=-3.0, lam=1e-9)


def test_layered_sphere_outer_radius():
    sphere = LayeredSphere(core_radius=150e-6, core_density=4100.0,
                           inner_coat=Layer(10e-9, 7140.0),
                           outer_coat=Layer(180e-9, 19280.0))
    assert sphere.outer_radius == pytest.approx(150e-6 + 190e-9, rel=1e-15)


def test_infinite_thickness_is_exact():
    # the whole point of using IEEE inf: no rounding in (1 - e^(-D/lam))
    assert math.exp(-INFINITE) == 0.0
    assert -math.expm1(-INFINITE / 1e-9) == 1.0


# ------------------------------------------------------------------- config

def test_parse_quantity_units():
    assert parse_quantity("150 um") == 150e-6
    assert parse_quantity("100 nm") == pytest.approx(1e-7, rel=1e-15)
    assert parse_quantity("1 mm") == 1e-3
    assert parse_quantity("0.2 m") == 0.2
    assert parse_quantity("19.28 g/cm3") == 19280.0
    assert parse_quantity("2330 kg/m3") == 2330.0
    assert parse_quantity("inf") == INFINITE
    assert parse_quantity("42") == 42.0


def test_parse_quantity_rejects_garbage():
    for bad in ("12 parsec", "one mm", "1 2 3", ""):
        with pytest.raises(InputError):
            parse_quantity(bad)


def test_parse_config_text_basics():
    text = """
    # comment line
    sphere.core_radius = 150 um   # trailing comment
    slab.top.density = 19.28 g/cm3
    pfa.d2 = inf
    sweep.radii = 50 um, 100 um, 150 um
    """
    parsed = parse_config_text(text)
    assert parsed["sphere.core_radius"] == 150e-6
    assert parsed["slab.top.density"] == 19280.0
    assert parsed["pfa.d2"] == INFINITE
    assert parsed["sweep.radii"] == pytest.approx([50e-6, 100e-6, 150e-6], rel=1e-15)


@pytest.mark.parametrize("text,fragment", [
    ("just words", "expected"),
    ("a = 1\na = 2", "duplicate"),
    ("= 3", "empty key"),
    ("x = 1 furlong", "unknown unit"),
])
def test_parse_config_text_errors_name_the_line(text, fragment):
    with pytest.raises(InputError) as err:
        parse_config_text(text, source="cfg")
    assert "cfg:" in str(err.value)
    assert fragment in str(err.value)


@given(st.floats(min_value=1e-12, max_value=1e6, allow_nan=False))
def test_config_roundtrip_keeps_15_digits(value):
    parsed = parse_config_text(f"x = {format_si(value)}")
    assert parsed["x"] == value  # repr round-trips floats exactly
