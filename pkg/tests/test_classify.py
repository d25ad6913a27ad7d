import numpy as np
import pytest

from wdclib.classify import (
    Classification,
    Estimate,
    Verdict,
    classify_sequence,
    combine_verdicts,
    extrapolate_limit,
    verdict_from,
)

J = np.arange(1, 11)
# n^0 ||D^6 p_n|| at n = 8, 16, ..., 256 for the weight (1 - |z|^2)^6
SETTLING = [1142.4, 2946.0, 4660.0, 5866.0, 6586.0, 6981.0]


class TestClassifySequence:
    @pytest.mark.parametrize(
        'values, expected',
        [
            pytest.param(np.ones(8), Classification.FINITE, id='constant'),
            pytest.param(2.0**J, Classification.DIVERGENT, id='geometric growth'),
            pytest.param(1 - 2.0**-J, Classification.FINITE, id='contracting'),
            pytest.param([1, 2, 1, 2, 1, 2, 1, 2], Classification.INCONCLUSIVE, id='oscillating'),
            pytest.param([1.0, 2.0, 3.0], Classification.INCONCLUSIVE, id='too short'),
            pytest.param([1.0, 2.0, np.inf], Classification.DIVERGENT, id='infinite'),
            pytest.param(np.zeros(6), Classification.FINITE, id='zero'),
            pytest.param(SETTLING, Classification.FINITE, id='large but contracting increments'),
            pytest.param(3.0 * 1.5**J, Classification.DIVERGENT, id='constant increments'),
        ],
    )
    def test_classification(self, values, expected):
        assert classify_sequence(values).classification is expected

    def test_value_is_last_entry(self):
        estimate = classify_sequence(1 - 2.0**-J)
        assert estimate.value == 1 - 2.0**-10
        assert len(estimate.trace) == 10

    def test_divergent_value_is_infinite(self):
        assert classify_sequence(2.0**J).value == np.inf

    def test_thresholds(self):
        values = 1.02**J
        assert classify_sequence(values).classification is Classification.INCONCLUSIVE
        assert classify_sequence(values, growth_threshold=0.01).is_divergent

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            classify_sequence([])


class TestExtrapolateLimit:
    def test_geometric_decay_is_zero(self):
        estimate = extrapolate_limit(2.0**-J)
        assert estimate.value == 0.0
        assert estimate.is_finite

    def test_decreasing_to_one(self):
        estimate = extrapolate_limit(1 + 2.0**-J)
        assert estimate.value == pytest.approx(1.0, abs=1e-9)
        assert estimate.is_finite

    def test_increasing_to_one(self):
        estimate = extrapolate_limit(1 - 2.0**-J)
        assert estimate.value == pytest.approx(1.0, abs=1e-9)
        assert estimate.value >= 1 - 2.0**-10

    def test_growth(self):
        assert extrapolate_limit(2.0**J).is_divergent

    def test_zero_last_value(self):
        assert extrapolate_limit([3.0, 1.0, 0.0]).value == 0.0

    def test_nonincreasing_stays_in_range(self):
        values = [4.0, 3.0, 2.9, 2.0]
        value = extrapolate_limit(values).value
        assert 0.0 <= value <= 2.0

    def test_large_contracting_increments_converge(self):
        estimate = extrapolate_limit(SETTLING)
        assert estimate.is_finite
        # (12 / e)^6
        assert estimate.value == pytest.approx((12 / np.e) ** 6, rel=0.02)

    def test_contracting_decay_keeps_its_limit(self):
        # log-increments -0.8, -0.4, -0.2, -0.1 sum towards -1.6
        values = np.exp(-np.cumsum([0.0, 0.8, 0.4, 0.2, 0.1]))
        estimate = extrapolate_limit(values)
        assert estimate.is_finite
        assert estimate.value == pytest.approx(np.exp(-1.6), rel=0.05)

    def test_short_sequence(self):
        estimate = extrapolate_limit([1.0, 0.5])
        assert estimate.classification is Classification.INCONCLUSIVE
        assert estimate.value == 0.5


class TestVerdicts:
    @pytest.mark.parametrize(
        'verdicts, expected',
        [
            pytest.param([Verdict.YES, Verdict.YES], Verdict.YES, id='all yes'),
            pytest.param([Verdict.YES, Verdict.NO], Verdict.NO, id='any no'),
            pytest.param([Verdict.INCONCLUSIVE, Verdict.NO], Verdict.NO, id='no wins'),
            pytest.param([Verdict.YES, Verdict.INCONCLUSIVE], Verdict.INCONCLUSIVE, id='undecided'),
            pytest.param([], Verdict.YES, id='empty'),
        ],
    )
    def test_combine(self, verdicts, expected):
        assert combine_verdicts(verdicts) is expected

    @pytest.mark.parametrize(
        'classification, verdict',
        [
            (Classification.FINITE, Verdict.YES),
            (Classification.DIVERGENT, Verdict.NO),
            (Classification.INCONCLUSIVE, Verdict.INCONCLUSIVE),
        ],
    )
    def test_verdict_from(self, classification, verdict):
        assert verdict_from(Estimate(1.0, classification)) is verdict


class TestEstimate:
    def test_to_dict(self):
        assert Estimate(2.0, Classification.FINITE, (1.0, 2.0)).to_dict() == dict(
            value=2.0, classification='FINITE', trace=[1.0, 2.0]
        )

    def test_factories(self):
        assert Estimate.zero().value == 0.0
        assert Estimate.divergent().is_divergent
