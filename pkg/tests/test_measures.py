import math
from fractions import Fraction as F

import pytest
from conftest import quadrature_mixed_moment

from dtmoments.errors import CapExceededError, WordParseError
from dtmoments.exact import ComplexRational as CQ
from dtmoments.measures import (
    Atomic,
    MomentTable,
    ScaledMeasure,
    UniformAnnulus,
    UniformDisk,
    UniformEllipse,
    conjugate,
    ellipse_mixed_moment,
    measure_from_json,
    measure_to_json,
    mixed_moment,
    scale,
)

DELTA0 = Atomic.delta(0)


def test_point_mass_at_zero():
    assert mixed_moment(DELTA0, 0, 0).value == 1
    for r, s in [(1, 0), (0, 1), (2, 3), (4, 4)]:
        assert mixed_moment(DELTA0, r, s).value == 0


def test_atomic_weights_must_sum_to_one():
    with pytest.raises(ValueError):
        Atomic(((CQ(F(1)), F(1, 2)),))


def test_atomic_matches_direct_power_sums():
    atoms = ((CQ(F(1, 2), F(1, 3)), F(1, 4)), (CQ(F(-1), F(2)), F(3, 4)))
    mu = Atomic(atoms)
    for r in range(4):
        for s in range(4):
            direct = sum(
                complex(w) * loc.to_complex() ** r * loc.to_complex().conjugate() ** s
                for loc, w in atoms
            )
            assert abs(mixed_moment(mu, r, s).as_complex() - direct) < 1e-12


class TestDisk:
    def test_unit_disk_rule(self):
        mu = UniformDisk(1)
        assert mixed_moment(mu, 1, 1).value == F(1, 2)
        for r in range(5):
            assert mixed_moment(mu, r, r).value == F(1, r + 1)

    def test_general_radius_rule(self):
        mu = UniformDisk(F(3, 2))
        for r in range(5):
            for s in range(5):
                want = F(3, 2) ** (2 * r) / (r + 1) if r == s else 0
                assert mixed_moment(mu, r, s).value == want

    def test_against_quadrature(self):
        got = mixed_moment(UniformDisk(1), 2, 2).as_complex()
        oracle = quadrature_mixed_moment(
            lambda x, y: x * x + y * y <= 1.0, 2, 2, (-1, 1, -1, 1)
        )
        assert abs(got - oracle) < 1e-3


class TestAnnulus:
    def test_diagonal_closed_form(self):
        for c in (F(1), F(3, 2), F(2)):
            mu = UniformAnnulus(c)
            for p in range(5):
                assert mixed_moment(mu, p, p).value == (
                    c ** (p + 1) - (c - 1) ** (p + 1)
                ) / (p + 1)

    def test_off_diagonal_zero(self):
        mu = UniformAnnulus(F(3, 2))
        for r in range(4):
            for s in range(4):
                if r != s:
                    assert mixed_moment(mu, r, s).value == 0

    def test_against_quadrature(self):
        c = 2.0
        got = mixed_moment(UniformAnnulus(F(2)), 1, 1).as_complex()
        oracle = quadrature_mixed_moment(
            lambda x, y: c - 1 <= x * x + y * y <= c,
            1, 1, (-math.sqrt(c), math.sqrt(c), -math.sqrt(c), math.sqrt(c)),
        )
        assert abs(got - oracle) < 1e-3


class TestEllipse:
    def test_circle_case_reduces_to_disk(self):
        # a = b collapses the two semi-axes; same moments as a disk of
        # radius a*sqrt(2), whose square is rational
        mu = UniformEllipse(F(1), F(1))
        for r in range(5):
            for s in range(5):
                want = F(2) ** r / (r + 1) if r == s else 0
                assert mixed_moment(mu, r, s).value == want

    def test_centered(self):
        assert ellipse_mixed_moment(F(1), F(1, 2), 1, 0).value == 0

    def test_frozen_quadrature_value(self):
        # E[z^2] for (a, b) = (1, 1/2); quadrature over the ellipse region
        # froze this at 3/4 before the closed form was written
        got = ellipse_mixed_moment(F(1), F(1, 2), 2, 0)
        assert got.value == F(3, 4)
        a2, b2 = 1.0, 0.25
        half_x = 2 * a2 / math.sqrt(a2 + b2)
        half_y = 2 * b2 / math.sqrt(a2 + b2)
        oracle = quadrature_mixed_moment(
            lambda x, y: (x / half_x) ** 2 + (y / half_y) ** 2 <= 1.0,
            2, 0, (-half_x, half_x, -half_y, half_y),
        )
        assert abs(got.as_complex() - oracle) < 1e-3

    def test_second_mixed_moment_closed_form(self):
        # E|z|^2 = (a^4 + b^4) / (a^2 + b^2)
        for a, b in [(F(1), F(1, 2)), (F(2), F(3)), (F(1, 3), F(1, 5))]:
            want = (a**4 + b**4) / (a**2 + b**2)
            assert ellipse_mixed_moment(a, b, 1, 1).value == want

    def test_float_parameters_give_float_backend(self):
        mv = ellipse_mixed_moment(math.cos(1.0), math.sin(1.0), 1, 1)
        assert not mv.exact
        a2, b2 = math.cos(1.0) ** 2, math.sin(1.0) ** 2
        assert abs(mv.as_complex() - (a2 * a2 + b2 * b2) / (a2 + b2)) < 1e-12


def test_hermitian_symmetry_all_models():
    models = [
        Atomic(((CQ(F(1, 2), F(1, 3)), F(1, 2)), (CQ(F(0), F(-1)), F(1, 2)))),
        UniformDisk(F(5, 4)),
        UniformAnnulus(F(7, 4)),
        UniformEllipse(F(2), F(1, 2)),
        scale(UniformDisk(1), CQ(F(1), F(2))),
    ]
    for mu in models:
        for r in range(7):
            for s in range(7):
                if r + s > 12:
                    continue
                assert mu.moment(r, s) == mu.moment(s, r).conjugate()


def test_rotation_invariant_models_vanish_off_diagonal():
    for mu in (UniformDisk(F(2)), UniformAnnulus(F(3, 2))):
        for r in range(5):
            for s in range(5):
                if r != s:
                    assert mu.moment(r, s) == 0


class TestScaleConjugate:
    def test_scale_moves_atoms(self):
        w = CQ(F(1, 2), F(1, 3))
        lam = CQ(F(0), F(2))
        assert scale(Atomic.delta(w), lam) == Atomic.delta(lam * w)

    def test_scale_disk_by_two(self):
        assert mixed_moment(scale(UniformDisk(1), CQ(F(2))), 1, 1).value == 2

    def test_scale_rule_holds_for_complex_scalars(self):
        lam = CQ(F(1), F(-1))
        mu = UniformAnnulus(F(3, 2))
        scaled = scale(mu, lam)
        for r in range(4):
            for s in range(4):
                assert scaled.moment(r, s) == lam**r * lam.conjugate() ** s * mu.moment(r, s)

    def test_scale_by_zero_rejected(self):
        with pytest.raises(ValueError):
            scale(UniformDisk(1), CQ(F(0)))

    def test_conjugate_rotation_invariant(self):
        assert conjugate(UniformDisk(F(2))) == UniformDisk(F(2))
        assert conjugate(UniformEllipse(F(1), F(2))) == UniformEllipse(F(1), F(2))

    def test_conjugate_swaps_orders(self):
        mu = Atomic.delta(CQ(F(1, 3), F(2, 5)))
        nu = conjugate(mu)
        for r in range(4):
            for s in range(4):
                assert nu.moment(r, s) == mu.moment(s, r)


class TestMomentTable:
    def test_degree_cap(self):
        table = MomentTable(3, (((1, 1), CQ(F(1, 2))),))
        assert table.moment(1, 1) == F(1, 2)
        with pytest.raises(CapExceededError):
            table.moment(2, 2)

    def test_conjugate_fallback(self):
        table = MomentTable(4, (((2, 1), CQ(F(1, 3), F(1, 5))),))
        assert table.moment(1, 2) == CQ(F(1, 3), F(-1, 5))


class TestJsonSpec:
    def test_roundtrip(self):
        specs = [
            {"type": "atomic", "atoms": [{"re": "1/2", "im": "1/3", "w": "1/4"},
                                         {"re": -1, "im": 2, "w": "3/4"}]},
            {"type": "disk", "radius": "3/2"},
            {"type": "annulus", "c": "2"},
            {"type": "ellipse", "a": "1", "b": "1/2"},
            {"type": "table", "max_degree": 2,
             "entries": [{"r": 1, "s": 1, "re": "1/2", "im": "0"}]},
        ]
        for spec in specs:
            mu = measure_from_json(spec)
            again = measure_from_json(measure_to_json(mu))
            assert again == mu

    def test_parses_json_text(self):
        mu = measure_from_json('{"type": "disk", "radius": "1"}')
        assert mu == UniformDisk(1)

    def test_bad_specs_raise(self):
        for bad in ("not json", '{"type": "nope"}', '{"radius": 1}',
                    '{"type": "annulus", "c": "1/2"}'):
            with pytest.raises(WordParseError):
                measure_from_json(bad)

    def test_scaled_has_no_json_form(self):
        with pytest.raises(WordParseError):
            measure_to_json(ScaledMeasure(UniformDisk(1), CQ(F(2))))
