import numpy as np
import numpy.testing
import pytest

from wdclib.analytic import ProbeFunction, TaylorFunction, monomial
from wdclib.errors import WrongSpace
from wdclib.grid import DiskGrid
from wdclib.quadrature import QuadratureConfig
from wdclib.spaces import (
    SpaceKind,
    SpaceSpec,
    bergman_norm,
    circle_mean,
    gamma,
    growth_bound_constant,
    hardy_norm,
    monomial_norm_exponent,
    norm,
    unit_bound_sweep,
    weighted_sup_norm,
)
from wdclib.weight import Weight

QUAD = QuadratureConfig(n_angles=256, n_radii=64)
GRID = DiskGrid(12, 256, sub_shells=4)


class TestSpaceSpec:
    @pytest.mark.parametrize(
        'space, expected',
        [
            pytest.param(SpaceSpec.hinf(), 0.0, id='H^inf'),
            pytest.param(SpaceSpec.growth(2.0), 2.0, id='A^-2'),
            pytest.param(SpaceSpec.bergman(2.0, 0.0), 1.0, id='A^2_0'),
            pytest.param(SpaceSpec.bergman(4.0, 1.0), 0.75, id='A^4_1'),
            pytest.param(SpaceSpec.hardy(2.0), 0.5, id='H^2'),
            pytest.param(SpaceSpec.hardy(4.0), 0.25, id='H^4'),
        ],
    )
    def test_gamma(self, space, expected):
        assert gamma(space) == expected
        assert space.gamma == expected

    @pytest.mark.parametrize(
        'kind, p, alpha',
        [
            pytest.param(SpaceKind.GROWTH, None, 0.0, id='growth alpha 0'),
            pytest.param(SpaceKind.BERGMAN, 2.0, -1.0, id='bergman alpha -1'),
            pytest.param(SpaceKind.BERGMAN, 0.0, 0.0, id='bergman p 0'),
            pytest.param(SpaceKind.HARDY, None, None, id='hardy without p'),
        ],
    )
    def test_rejects(self, kind, p, alpha):
        with pytest.raises(ValueError):
            SpaceSpec(kind, p, alpha)

    def test_labels(self):
        labels = [s.label for s in (SpaceSpec.hinf(), SpaceSpec.growth(1), SpaceSpec.bergman(2, 1), SpaceSpec.hardy(2))]
        assert labels == ['H^inf', 'A^-1', 'A^2_1', 'H^2']

    def test_sup_type(self):
        assert SpaceSpec.hinf().is_sup_type and SpaceSpec.growth(1).is_sup_type
        assert not SpaceSpec.hardy(2).is_sup_type

    def test_weight(self):
        assert SpaceSpec.growth(1.5).weight() == Weight.power(1.5)
        with pytest.raises(WrongSpace):
            SpaceSpec.hardy(2).weight()

    @pytest.mark.parametrize(
        'space', [SpaceSpec.hinf(), SpaceSpec.growth(1), SpaceSpec.bergman(2, 0.5), SpaceSpec.hardy(3)]
    )
    def test_from_dict(self, space):
        assert SpaceSpec.from_dict(space.to_dict()) == space

    def test_from_dict_lower_case(self):
        assert SpaceSpec.from_dict(dict(kind='hardy', p=2)) == SpaceSpec.hardy(2)


class TestIntegralNorms:
    @pytest.mark.parametrize('n', [0, 1, 5, 40])
    def test_hardy_monomial(self, n):
        assert hardy_norm(monomial(n), 2.0, QUAD) == pytest.approx(1.0)

    def test_hardy_test_function_is_unit(self):
        assert hardy_norm(ProbeFunction(0.5, 0.5), 2.0, QUAD) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize('n', [0, 1, 7, 30])
    def test_bergman_monomial(self, n):
        assert bergman_norm(monomial(n), 2.0, 0.0, QUAD) == pytest.approx((n + 1) ** -0.5, rel=1e-12)

    def test_bergman_test_function_is_unit(self):
        f = ProbeFunction(0.6, 1.5)
        assert bergman_norm(f, 2.0, 1.0, QUAD) == pytest.approx(1.0, abs=1e-8)

    def test_hardy_constant(self):
        assert hardy_norm(TaylorFunction([3.0]), 1.0, QUAD) == pytest.approx(3.0)

    def test_circle_means_increase(self):
        f = ProbeFunction(0.7j, 0.5).taylor() + monomial(3)
        means = [circle_mean(f, r, 2.0, QUAD) for r in np.linspace(0, 1, 11)]
        assert np.all(np.diff(means) >= -1e-12)

    def test_quadrature_converges(self):
        f = ProbeFunction(0.9, 0.5)
        values = [hardy_norm(f, 2.0, QuadratureConfig(n_angles=n)) for n in (64, 128, 256)]
        errors = np.abs(np.array(values) - 1.0)
        assert errors[-1] <= errors[0]
        assert errors[-1] < 1e-8

    @pytest.mark.parametrize('p', [1.0, 2.0, 4.0])
    @pytest.mark.parametrize('n', [0, 1, 5, 40, 64])
    def test_hardy_monomial_any_exponent(self, n, p):
        assert hardy_norm(monomial(n), p, QUAD) == pytest.approx(1.0, abs=1e-8)

    @pytest.mark.parametrize(
        'a', [0.0, 0.5, 0.9 * np.exp(0.25j * np.pi)], ids=['origin', 'half', 'near boundary']
    )
    def test_test_function_norms_are_unit(self, a):
        # Poisson kernel for H^2, the Bergman series identity for A^2_1 (gamma = 3/2)
        quad = QuadratureConfig(n_angles=512, n_radii=128)
        assert hardy_norm(ProbeFunction(a, 0.5), 2.0, quad) == pytest.approx(1.0, abs=1e-6)
        assert bergman_norm(ProbeFunction(a, 1.5), 2.0, 1.0, quad) == pytest.approx(1.0, abs=1e-6)

    @pytest.mark.parametrize('p', [2.0, 4.0])
    @pytest.mark.parametrize('alpha', [-0.5, 0.0, 1.5])
    @pytest.mark.parametrize(
        'f',
        [monomial(7), TaylorFunction([1.0, 0.5j, -0.25, 0.0, 0.1])],
        ids=['monomial', 'polynomial'],
    )
    def test_bergman_quadrature_converges(self, f, alpha, p):
        coarse = bergman_norm(f, p, alpha, QUAD)
        fine = bergman_norm(f, p, alpha, QUAD.refined())
        assert abs(fine - coarse) < 1e-8

    def test_rejects_bad_exponent(self):
        with pytest.raises(ValueError):
            hardy_norm(monomial(1), 0.0)
        with pytest.raises(ValueError):
            bergman_norm(monomial(1), 2.0, -1.0)


class TestWeightedSupNorm:
    @pytest.mark.parametrize('n, alpha', [(4, 1.0), (10, 0.5), (3, 2.0)])
    def test_power_weight_monomial(self, n, alpha):
        # maximiser at r^2 = n / (n + 2 alpha)
        t = n / (n + 2 * alpha)
        expected = t ** (n / 2) * (1 - t) ** alpha
        result = weighted_sup_norm(monomial(n), Weight.power(alpha), GRID)
        assert result.value == pytest.approx(expected, rel=1e-6)
        assert abs(result.location) ** 2 == pytest.approx(t, rel=1e-2)

    def test_unit_weight_reaches_boundary(self):
        result = weighted_sup_norm(monomial(5), Weight.unit(), GRID)
        assert result.value == pytest.approx(1.0)
        assert result.finite

    def test_growth_test_function_is_unit(self):
        assert norm(ProbeFunction(0.5, 1.0), SpaceSpec.growth(1.0), grid=GRID) == pytest.approx(1.0, rel=1e-6)

    @pytest.mark.parametrize(
        'space', [SpaceSpec.hinf(), SpaceSpec.growth(1), SpaceSpec.bergman(2, 0), SpaceSpec.hardy(2)]
    )
    def test_homogeneous(self, space):
        f = ProbeFunction(0.3 + 0.2j, space.gamma, 1)
        assert norm(2.5 * f.taylor(), space, QUAD, GRID) == pytest.approx(
            2.5 * norm(f.taylor(), space, QUAD, GRID), rel=1e-9
        )


@pytest.mark.slow
class TestMonomialExponent:
    @pytest.mark.parametrize(
        'space, expected, tolerance',
        [
            pytest.param(SpaceSpec.hardy(2.0), 0.0, 0.05, id='H^2'),
            pytest.param(SpaceSpec.bergman(2.0, 0.0), -0.5, 0.05, id='A^2_0'),
            pytest.param(SpaceSpec.hinf(), 0.0, 0.01, id='H^inf'),
            pytest.param(SpaceSpec.growth(1.0), -1.0, 0.1, id='A^-1'),
        ],
    )
    def test_slope(self, space, expected, tolerance):
        fit = monomial_norm_exponent(space, quad=QUAD, grid=GRID)
        assert abs(fit.slope - expected) <= tolerance
        assert fit.n == (4, 8, 16, 32, 64, 128, 256)


class TestGrowthBound:
    def test_schwarz_pick(self):
        probes = [ProbeFunction(a, 0.0, 1) for a in (0.0, 0.5, 0.8j)]
        bound = growth_bound_constant(SpaceSpec.hinf(), 1, probes, DiskGrid(8, 128, sub_shells=2))
        assert bound.value == pytest.approx(1.0, abs=1e-3)
        assert bound.stable
        assert len(bound.trace) == 2

    def test_zero_order_is_sup(self):
        probes = [monomial(1), ProbeFunction(0.5, 0.0)]
        bound = growth_bound_constant(SpaceSpec.hinf(), 0, probes, DiskGrid(8, 128, sub_shells=2))
        assert bound.value == pytest.approx(1.0, abs=1e-6)


class TestUnitBound:
    def test_hardy(self):
        anchors = np.array([0.0, 0.3, 0.6j, -0.9])
        norms = unit_bound_sweep(SpaceSpec.hardy(2.0), anchors, 2, QUAD)
        assert norms.shape == (3, 4)
        numpy.testing.assert_array_less(norms, 1.0 + 1e-6)
        numpy.testing.assert_allclose(norms[0], 1.0, atol=1e-6)
