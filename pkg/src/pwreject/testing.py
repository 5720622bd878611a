"""Generic pointwise-rejection test engine.

A simple-null tester is any callable ``tester(point) -> p-value`` for
H0: theta = point on a fixed observed dataset.  The composite decision
compares the maximum p-value across test points with the modified level
alpha'.  Ties at the threshold reject.
"""

from dataclasses import dataclass

from pwreject.alpha_prime import alpha_prime
from pwreject.distributions import chi2_cdf, chi2_quantile

__all__ = ["TestDecision", "max_p_value", "pointwise_test", "lrt_decision_subspace"]


@dataclass(frozen=True)
class TestDecision:
    """Outcome of a composite test: reject iff max_p <= alpha_prime_used.

    n_points == 0 marks a closed-form decision over a continuum of test
    points rather than a finite list.
    """

    reject: bool
    max_p: float
    alpha_prime_used: float
    n_points: int


def max_p_value(tester, points):
    """Maximum simple-null p-value over the test points."""
    best = None
    for point in points:
        p = tester(point)
        if best is None or p > best:
            best = p
    if best is None:
        raise ValueError("at least one test point is required")
    return best


def pointwise_test(tester, points, spec, alpha, early_exit=False):
    """Composite test: reject iff every point's p-value is <= alpha'.

    With ``early_exit`` the scan stops at the first p-value above alpha';
    the decision is unchanged but the reported max_p is then only the
    first exceeding value, not necessarily the overall maximum.
    """
    ap = alpha_prime(alpha, spec)
    if early_exit:
        best = None
        count = 0
        for point in points:
            p = tester(point)
            count += 1
            if best is None or p > best:
                best = p
            if p > ap:
                break
        if best is None:
            raise ValueError("at least one test point is required")
        return TestDecision(best <= ap, best, ap, count)
    n = len(points)
    best = max_p_value(tester, points)
    return TestDecision(best <= ap, best, ap, n)


def lrt_decision_subspace(neg2_log_lambda, spec, alpha):
    """Traditional likelihood ratio test for a boundaryless null region.

    The caller supplies -2 log Lambda(Theta0, Theta1; x); rejection occurs
    at or above the chi2_{1-alpha, d1-d0} critical value.
    """
    if spec.has_boundary:
        raise ValueError("the traditional LRT applies only to boundaryless nulls")
    if neg2_log_lambda < 0.0:
        raise ValueError("-2 log Lambda must be nonnegative")
    dg = spec.d1 - spec.d0
    p = 1.0 - chi2_cdf(neg2_log_lambda, dg)
    # reject iff the statistic reaches the critical value, i.e. p <= alpha
    reject = neg2_log_lambda >= chi2_quantile(1.0 - alpha, dg)
    return TestDecision(reject, p, alpha, 0)
