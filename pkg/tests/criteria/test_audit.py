import pytest

from wdclib.analytic import TaylorFunction, identity, zero
from wdclib.classify import Verdict
from wdclib.criteria import AuditOutcome, compute_report, equivalence_audit
from wdclib.operator import OperatorSpec
from wdclib.spaces import SpaceSpec
from wdclib.weight import Weight

from .test_fixtures import NAMES


@pytest.mark.slow
class TestEquivalenceAudit:
    @pytest.mark.parametrize('name', NAMES)
    def test_no_failures(self, suite_results, name):
        records = equivalence_audit(suite_results[name].report)
        failed = [r.to_dict() for r in records if r.outcome is AuditOutcome.FAIL]
        assert not failed

    @pytest.mark.parametrize('name', ['identity_hinf_power1', 'derivative_only_hinf_power_half'])
    def test_degenerate_test_function_is_excluded(self, suite_results, name):
        records = equivalence_audit(suite_results[name].report)
        excluded = [r for r in records if r.outcome is AuditOutcome.EXCLUDED]
        assert excluded
        assert all(r.property == 'compact' and 'iv' in (r.left, r.right) for r in excluded)

    def test_positive_gamma_is_not_excluded(self, suite_results):
        records = equivalence_audit(suite_results['strict_half_growth1_power1'].report)
        assert all(r.outcome is AuditOutcome.PASS for r in records)

    def test_pairs(self, suite_results):
        records = equivalence_audit(suite_results['identity_growth1_power1'].report)
        counts = {}
        for r in records:
            counts[r.property] = counts.get(r.property, 0) + 1
        assert counts == dict(bounded=6, compact=6)

    def test_hardy_pairs(self, suite_results):
        records = equivalence_audit(suite_results['composition_identity_hardy2_boundary'].report)
        assert {(r.property, r.left, r.right) for r in records} == {
            ('bounded', 'b', 'c'),
            ('bounded', 'b', 'd'),
            ('bounded', 'c', 'd'),
            ('compact', 'ii', 'iii'),
            ('compact', 'ii', 'iv'),
            ('compact', 'iii', 'iv'),
            ('order_bounded', 'ii', 'iii'),
            ('order_bounded', 'ii', 'iv'),
            ('order_bounded', 'iii', 'iv'),
        }

    def test_evidence(self, suite_results):
        record = equivalence_audit(suite_results['identity_hinf_power1'].report)[0]
        assert set(record.evidence) == {record.left, record.right}
        assert record.to_dict()['outcome'] == record.outcome.value


@pytest.mark.slow
class TestSecondDerivativeAudit:
    @pytest.fixture(scope='class')
    def report(self, fast_config):
        # u_0 = 1, u_2 = 1/2, tau = z from A^-1 into the weight (1 - |z|^2)^3
        S = OperatorSpec([TaylorFunction([1.0]), zero(), TaylorFunction([0.5])], identity())
        return compute_report(S, SpaceSpec.growth(1.0), Weight.power(3.0), config=fast_config)

    def test_monomial_condition_is_bounded(self, report):
        assert report.bounded is Verdict.YES
        assert report.monomial_sup.is_finite

    def test_monomial_pairs_agree(self, report):
        outcomes = {
            (r.left, r.right): r.outcome
            for r in equivalence_audit(report)
            if r.property == 'bounded'
        }
        assert outcomes[('b', 'e')] is AuditOutcome.PASS
        assert outcomes[('c', 'e')] is AuditOutcome.PASS
        assert AuditOutcome.FAIL not in outcomes.values()
