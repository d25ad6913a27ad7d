import numpy as np
import pandas as pd
import pytest

from wdclib.lemmas import lemmas_passed, unit_bound_anchors, verify_lemmas


@pytest.fixture(scope='module')
def lemma_table(fast_config):
    # the unit-bound sweep reaches |a| = 0.95 and needs the full angular resolution
    return verify_lemmas(fast_config.with_overrides(angles=1024))


def _rows(frame, lemma):
    return frame[frame['lemma'] == lemma]


class TestAnchors:
    def test_layout(self):
        anchors = unit_bound_anchors()
        assert anchors.shape == (12,)
        assert sorted(set(np.round(np.abs(anchors), 12))) == [0.3, 0.6, 0.95]


@pytest.mark.slow
class TestVerifyLemmas:
    def test_columns(self, lemma_table):
        assert list(lemma_table.columns) == [
            'lemma', 'item', 'space', 'measured', 'expected', 'tolerance', 'status', 'detail'
        ]

    def test_gamma_table(self, lemma_table):
        rows = _rows(lemma_table, 'gamma')
        assert len(rows) == 6
        assert (rows['status'] == 'PASS').all()

    def test_monomial_exponents(self, lemma_table):
        rows = _rows(lemma_table, 'monomial_exponent').set_index('space')
        assert rows.loc['H^2', 'status'] == 'PASS'
        assert rows.loc['A^2_0', 'status'] == 'PASS'
        assert rows.loc['H^inf', 'status'] == 'PASS'
        # the sign discrepancy of the growth-space exponent is recorded, not failed
        assert rows.loc['A^-1', 'status'] == 'FLAG'
        assert rows.loc['A^-1', 'measured'] == pytest.approx(-0.94, abs=0.02)

    def test_growth_constants(self, lemma_table):
        rows = _rows(lemma_table, 'growth_bound')
        assert len(rows) == 12
        assert np.all(np.isfinite(rows['measured'])) and np.all(rows['measured'] > 0)
        assert rows['detail'].str.startswith('refinement trace').all()

    def test_unit_bound(self, lemma_table):
        rows = _rows(lemma_table, 'unit_bound')
        assert len(rows) == 4
        assert (rows['status'] == 'PASS').all()
        assert (rows['measured'] <= 1.0 + 1e-6).all()


class TestLemmasPassed:
    def test_flag_is_not_failure(self):
        frame = pd.DataFrame(dict(status=['PASS', 'FLAG']))
        assert lemmas_passed(frame)

    def test_failure(self):
        frame = pd.DataFrame(dict(status=['PASS', 'FAIL']))
        assert not lemmas_passed(frame)
