# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled special-function kernels.

Same algorithms as ``_kernels_py.py``: series / Lentz continued fraction for
the regularized incomplete gamma, continued fraction with the symmetry
switch for the regularized incomplete beta.
"""

from libc.math cimport exp, log, log1p, lgamma, fabs

cdef int _MAX_ITER = 500
cdef double _EPS = 1e-16
cdef double _TINY = 1e-300

BACKEND = "cython"


cdef double _gamma_series(double s, double x):
    cdef double term = 1.0 / s
    cdef double total = term
    cdef double a = s
    cdef int i
    for i in range(_MAX_ITER):
        a += 1.0
        term *= x / a
        total += term
        if fabs(term) < fabs(total) * _EPS:
            break
    return total * exp(s * log(x) - x - lgamma(s))


cdef double _gamma_cf(double s, double x):
    cdef double b = x + 1.0 - s
    cdef double c = 1.0 / _TINY
    cdef double d = 1.0 / b
    cdef double h = d
    cdef double an, delta
    cdef int i
    for i in range(1, _MAX_ITER):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if fabs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if fabs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if fabs(delta - 1.0) < _EPS:
            break
    return exp(s * log(x) - x - lgamma(s)) * h


cpdef double reg_lower_gamma(double s, double x) except -1.0:
    """Regularized lower incomplete gamma P(s, x)."""
    if s <= 0.0:
        raise ValueError("shape parameter must be positive, got %r" % s)
    if x < 0.0:
        raise ValueError("argument must be nonnegative, got %r" % x)
    if x == 0.0:
        return 0.0
    if x < s + 1.0:
        return _gamma_series(s, x)
    return 1.0 - _gamma_cf(s, x)


cdef double _beta_cf(double a, double b, double x):
    cdef double qab = a + b
    cdef double qap = a + 1.0
    cdef double qam = a - 1.0
    cdef double c = 1.0
    cdef double d = 1.0 - qab * x / qap
    cdef double h, aa, delta
    cdef int m, m2
    if fabs(d) < _TINY:
        d = _TINY
    d = 1.0 / d
    h = d
    for m in range(1, _MAX_ITER):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if fabs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if fabs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if fabs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if fabs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if fabs(delta - 1.0) < _EPS:
            break
    return h


cpdef double reg_inc_beta(double a, double b, double x) except -1.0:
    """Regularized incomplete beta I_x(a, b)."""
    cdef double front
    if a <= 0.0 or b <= 0.0:
        raise ValueError("beta parameters must be positive, got %r, %r" % (a, b))
    if x < 0.0 or x > 1.0:
        raise ValueError("argument must lie in [0, 1], got %r" % x)
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    front = exp(lgamma(a + b) - lgamma(a) - lgamma(b)
                + a * log(x) + b * log1p(-x))
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_cf(a, b, x) / a
    return 1.0 - front * _beta_cf(b, a, 1.0 - x) / b
