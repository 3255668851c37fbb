import math
from fractions import Fraction

import numpy as np
import pytest

from trimhill import make_sample


@pytest.fixture
def s5():
    """Sample with log-values 4,3,2,1,0: every Hill-family value is rational."""
    return make_sample([math.e**i for i in range(5)])


def frac_trimmed(logs, k0, k):
    """Independent rational-arithmetic evaluation of the trimmed Hill formula.

    logs are the descending log order statistics as exact Fractions/ints.
    """
    logs = [Fraction(v) for v in logs]
    correction = Fraction(k0, k - k0) * (logs[k0] - logs[k])
    body = sum(logs[i - 1] - logs[k] for i in range(k0 + 1, k + 1))
    return correction + Fraction(1, k - k0) * body


def frac_biased(logs, k0, k):
    logs = [Fraction(v) for v in logs]
    body = sum(logs[i - 1] - logs[k] for i in range(k0 + 1, k + 1))
    return Fraction(1, k - k0) * body


def random_sample(rng, n):
    """Heavy-tailed-ish positive values spanning many orders of magnitude."""
    return make_sample(np.exp(rng.uniform(-20, 20, size=n)))
