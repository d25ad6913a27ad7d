import numpy as np
import numpy.testing
import pytest

from wdclib.weight import Weight, WeightForm


class TestPowerWeight:
    def test_values(self):
        nu = Weight.power(1.0)
        numpy.testing.assert_allclose(nu(np.array([0.0, 0.5, 0.5j])), [1.0, 0.75, 0.75])

    def test_unit(self):
        nu = Weight.unit()
        assert nu.label == '1'
        numpy.testing.assert_array_equal(nu(np.array([0.0, 0.99])), [1.0, 1.0])

    def test_boundary_value(self):
        assert Weight.power(0.5)(1.0) == 0.0

    def test_rejects_negative_beta(self):
        with pytest.raises(ValueError):
            Weight.power(-1.0)

    def test_label(self):
        assert Weight.power(0.5).label == '(1-|z|^2)^0.5'


class TestSampledWeight:
    def test_interpolates_nodes(self):
        nu = Weight.sampled([0.0, 0.5, 1.0], [1.0, 0.5, 0.0])
        numpy.testing.assert_allclose(nu(np.array([0.0, 0.5, 1.0])), [1.0, 0.5, 0.0])

    def test_stays_within_data(self):
        nu = Weight.sampled([0.0, 0.3, 0.9, 1.0], [1.0, 0.9, 0.2, 0.0])
        values = nu(np.linspace(0, 1, 101))
        assert np.all(values >= 0.0) and np.all(values <= 1.0)
        assert np.all(np.diff(values) <= 1e-15)

    @pytest.mark.parametrize(
        'radii, values',
        [
            pytest.param([0.1, 1.0], [1.0, 0.0], id='not from 0'),
            pytest.param([0.0, 0.9], [1.0, 0.0], id='not to 1'),
            pytest.param([0.0, 0.5, 0.5, 1.0], [1.0, 1.0, 1.0, 0.0], id='repeated'),
            pytest.param([0.0, 0.5, 1.0], [1.0, 0.0, 0.0], id='zero inside'),
            pytest.param([0.0, 1.0], [1.0], id='length'),
        ],
    )
    def test_rejects(self, radii, values):
        with pytest.raises(ValueError):
            Weight.sampled(radii, values)

    def test_clips_radius(self):
        nu = Weight.sampled([0.0, 1.0], [2.0, 1.0])
        assert nu(1.0 + 1e-12) == pytest.approx(1.0)


class TestWeightDict:
    @pytest.mark.parametrize(
        'weight',
        [Weight.power(0.5), Weight.unit(), Weight.sampled([0.0, 0.5, 1.0], [1.0, 0.5, 0.1])],
    )
    def test_from_dict(self, weight):
        assert Weight.from_dict(weight.to_dict()) == weight

    def test_form_is_case_insensitive(self):
        assert Weight.from_dict(dict(form='power', beta=1)).form is WeightForm.POWER

    def test_unknown_form(self):
        with pytest.raises(ValueError):
            Weight.from_dict(dict(form='LOG'))
