"""One-dimensional region algebra and the generic confidence-region builder.

A Region1D is a canonical union of disjoint closed intervals.  Confidence
regions for a scalar parameter of interest are built by unioning, over
proxy nuisance values, the parameter sets not rejected at the modified
level alpha'.
"""

from dataclasses import dataclass

from pwreject.alpha_prime import NullSpec, alpha_prime_no_boundary

__all__ = ["Region1D", "build_region"]


@dataclass(frozen=True, init=False)
class Region1D:
    """Sorted union of disjoint closed intervals [lo, hi] on the real line.

    Touching or overlapping input intervals are merged on construction, so
    two regions covering the same set compare equal.
    """

    intervals: tuple

    def __init__(self, intervals=()):
        cleaned = []
        for lo, hi in intervals:
            if hi < lo:
                raise ValueError("interval endpoints out of order: (%r, %r)" % (lo, hi))
            cleaned.append((float(lo), float(hi)))
        cleaned.sort()
        merged = []
        for lo, hi in cleaned:
            if merged and lo <= merged[-1][1]:
                merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
            else:
                merged.append((lo, hi))
        object.__setattr__(self, "intervals", tuple(merged))

    @classmethod
    def empty(cls):
        return cls(())

    def __bool__(self):
        return bool(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def union(self, other):
        return Region1D(self.intervals + other.intervals)

    def contains(self, x):
        """Membership with inclusive endpoints."""
        for lo, hi in self.intervals:
            if lo <= x <= hi:
                return True
            if x < lo:
                return False
        return False


def union_all(regions):
    out = Region1D.empty()
    for r in regions:
        out = out.union(r)
    return out


def build_region(psi_solver, proxy_points, alpha, d_psi=1, d_phi=1):
    """Confidence region for psi by union over proxy nuisance values.

    ``psi_solver(phi_t, alpha_prime) -> Region1D`` returns the set of psi
    values not rejected at level alpha' when the nuisance is pinned at
    phi_t.  alpha' comes from the boundaryless formula with d1 = d_psi +
    d_phi and d0 = d_phi.
    """
    if not proxy_points:
        raise ValueError("at least one proxy point is required")
    spec = NullSpec(d1=d_psi + d_phi, d0=d_phi, has_boundary=False)
    ap = alpha_prime_no_boundary(alpha, spec)
    return union_all(psi_solver(phi_t, ap) for phi_t in proxy_points)
