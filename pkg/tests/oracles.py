"""Brute-force reference implementations used only by the tests.

Nothing here touches the closed forms under test: scaling is checked by
pushing a dense sample of the operand through the map point by point, and
addition by maximizing min(mu_A(x), mu_B(z - x)) over a refined grid.
"""

import numpy as np

from fuzzyess import TriFuzzy, membership


def scale_image_points(f: TriFuzzy, c: float, n: int = 4001):
    """(z, membership) pairs of the image of f under x -> c*x.

    For c > 0 the map is a bijection, so the sup over the preimage of each
    image point is the membership of that single point.  No closed form of
    the scaled number is consulted.
    """
    lo, hi = f.support
    xs = np.linspace(lo, hi, n) if hi > lo else np.array([f.center])
    return c * xs, membership(f, xs)


def sup_min_add(a: TriFuzzy, b: TriFuzzy, z: float, coarse: int = 4097, fine: int = 1025) -> float:
    """Extension-principle membership of z in a + b by grid maximization.

    min(mu_A(x), mu_B(z - x)) is quasi-concave in x, so a coarse argmax
    followed by one local refinement brackets the true supremum to far
    better than the comparison tolerances used by the callers.
    """
    lo, hi = a.support
    if hi == lo:
        return float(membership(b, z - a.center))
    xs = np.linspace(lo, hi, coarse)
    vals = np.minimum(membership(a, xs), membership(b, z - xs))
    k = int(np.argmax(vals))
    w = xs[1] - xs[0]
    xs = np.linspace(max(lo, xs[k] - w), min(hi, xs[k] + w), fine)
    vals = np.minimum(membership(a, xs), membership(b, z - xs))
    return float(vals.max())


def random_fuzzy(rng: np.random.Generator, center_range=(-10.0, 10.0), width_range=(0.05, 3.0)) -> TriFuzzy:
    # width floor keeps grid oracles well-posed; crisp cases get exact tests
    return TriFuzzy(rng.uniform(*center_range), rng.uniform(*width_range))
