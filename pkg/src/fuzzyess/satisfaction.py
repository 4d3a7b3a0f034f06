"""Degree to which one triangular fuzzy number exceeds another.

The comparison degree is the normalized double integral

    SF(A > B) = (integral of T(mu_A(x), mu_B(y)) over the half-plane x > y)
                / (integral of T(mu_A(x), mu_B(y)) over the whole plane)

where T is a T-norm.  Under the product T-norm this equals
P(X > Y) for independent X and Y whose densities are proportional to the
memberships, and for symmetric triangles it reduces to an exact
piecewise-polynomial integral: the inner integral over x is a piecewise
quadratic tail area, the outer integrand is piecewise cubic, and the only
breakpoints are the support endpoints and centers of the two operands.
Each cubic segment is integrated by two-point Gauss quadrature, which is
exact for cubics and, unlike the expanded antiderivative, loses no digits
when one support is much narrower than the other.  The antiderivative
form stays available through ``comparison_poly`` and
``integrate_segments`` as an independent cross-check.

The min T-norm has no closed form here and is served by two-dimensional
grid quadrature only.  Crisp operands degenerate to a step comparison
(1 / 0.5 / 0) or to a point mass measured against the fuzzy side.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fuzzy import TriFuzzy, membership
from .numerics import PiecewisePoly

__all__ = [
    "SFConfig",
    "sf_greater",
    "sf_less",
    "sf_greater_oracle",
    "comparison_poly",
]

_TNORMS = ("product", "min")
_MODES = ("exact", "grid")

# below this width ratio the narrow operand behaves as a point mass: the
# closed-form error of that limit is (ratio^2)/12, far under rounding noise
_POINTLIKE_RATIO = 1e-9


@dataclass(frozen=True)
class SFConfig:
    """Knobs shared by every satisfaction-function evaluation.

    Attributes:
        tnorm: "product" (default) or "min".
        mode: "exact" closed form or "grid" quadrature.  The exact mode
            exists only for the product T-norm; the offending combination
            is rejected when a comparison is actually requested.
        grid_resolution: points per axis in grid mode, and epsilon samples
            per unit interval in the stability pipeline.
        tolerance: numeric slack for exact-mode comparisons.
        crossing_tolerance: absolute tolerance for locating the
            membership/identity crossing in the stability pipeline.
    """

    tnorm: str = "product"
    mode: str = "exact"
    grid_resolution: int = 2048
    tolerance: float = 1e-9
    crossing_tolerance: float = 1e-6

    def __post_init__(self) -> None:
        if self.tnorm not in _TNORMS:
            raise ValueError(f"tnorm must be one of {_TNORMS}, got {self.tnorm!r}")
        if self.mode not in _MODES:
            raise ValueError(f"mode must be one of {_MODES}, got {self.mode!r}")
        if not isinstance(self.grid_resolution, int) or self.grid_resolution < 64:
            raise ValueError(
                f"grid_resolution must be an int >= 64, got {self.grid_resolution!r}"
            )
        if not self.tolerance > 0.0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if not self.crossing_tolerance > 0.0:
            raise ValueError(
                f"crossing_tolerance must be positive, got {self.crossing_tolerance}"
            )

    def require_valid_combination(self) -> None:
        # exact integration of the min T-norm is deliberately unsupported
        if self.mode == "exact" and self.tnorm != "product":
            raise ValueError(
                "exact mode supports only the product T-norm; "
                "use mode='grid' for tnorm='min'"
            )


_DEFAULT = SFConfig()


def _tri_left_fraction(t):
    """Fraction of a unit symmetric triangle's area lying left of t.

    ``t`` is measured in half-widths from the center; saturates to 0 and 1
    outside [-1, 1].
    """
    tc = np.clip(t, -1.0, 1.0)
    return np.where(tc <= 0.0, 0.5 * (1.0 + tc) ** 2, 1.0 - 0.5 * (1.0 - tc) ** 2)


def comparison_poly(a: TriFuzzy, b: TriFuzzy) -> PiecewisePoly:
    """Outer integrand of the product-T-norm numerator, as a piecewise cubic.

    The variable is y shifted so that ``b`` is centered at 0 (the degree
    depends only on the center difference); the polynomial equals
    ``mu_B(y) * (area of mu_A right of y)`` on the support of ``b``.
    Integrating it over that support and dividing by the product of the
    half-widths yields SF(a > b).
    """
    alpha, beta = a.half_width, b.half_width
    if alpha <= 0.0 or beta <= 0.0:
        raise ValueError("comparison_poly requires two genuinely fuzzy operands")
    d = a.center - b.center

    cuts = np.unique(
        np.concatenate(
            [
                [-beta, 0.0, beta],
                np.clip([d - alpha, d, d + alpha], -beta, beta),
            ]
        )
    )
    coeffs = []
    for lo, hi in zip(cuts[:-1], cuts[1:]):
        m = 0.5 * (lo + hi)
        if m <= 0.0:
            lin = (1.0, 1.0 / beta)  # rising edge of mu_B
        else:
            lin = (1.0, -1.0 / beta)
        if m <= d - alpha:
            quad = (alpha,)  # entire area of mu_A is right of y
        elif m <= d:
            e = d - alpha
            quad = (alpha - e * e / (2.0 * alpha), e / alpha, -1.0 / (2.0 * alpha))
        elif m <= d + alpha:
            e = d + alpha
            quad = (e * e / (2.0 * alpha), -e / alpha, 1.0 / (2.0 * alpha))
        else:
            quad = (0.0,)
        coeffs.append(tuple(np.convolve(lin, quad)))
    return PiecewisePoly(tuple(cuts), tuple(coeffs))


def sf_greater(a: TriFuzzy, b: TriFuzzy, cfg: SFConfig | None = None) -> float:
    """Truth degree of "a exceeds b", in [0, 1].

    Exactly 1 when the support of ``a`` lies at or above the support of
    ``b`` and exactly 0 in the mirrored case; exactly 0.5 whenever the
    centers coincide (reflecting both operands through the shared center
    swaps the two half-planes, whatever the T-norm); crisp-vs-crisp uses
    the step rule, and a crisp operand against a fuzzy one is treated as
    a point mass, as is an operand whose width is negligible next to the
    other's.
    """
    cfg = cfg or _DEFAULT
    cfg.require_valid_combination()
    a_lo, a_hi = a.support
    b_lo, b_hi = b.support
    if a.is_crisp and b.is_crisp:
        if a.center > b.center:
            return 1.0
        if a.center < b.center:
            return 0.0
        return 0.5
    if a.center == b.center:
        return 0.5
    if a_lo >= b_hi:
        return 1.0
    if a_hi <= b_lo:
        return 0.0
    alpha, beta = a.half_width, b.half_width
    # a crisp operand, or one whose width vanishes next to the other's,
    # acts as a point mass measured against the fuzzy side, whatever the
    # T-norm
    if alpha < _POINTLIKE_RATIO * beta:
        return float(_tri_left_fraction((a.center - b.center) / beta))
    if beta < _POINTLIKE_RATIO * alpha:
        return float(1.0 - _tri_left_fraction((b.center - a.center) / alpha))
    if alpha * beta == 0.0:
        # both widths sit so deep in the subnormal range that the product
        # underflows; SF is translation and scale invariant, so divide
        # through by the larger width and retry (once is enough: it
        # becomes 1 and the ratio floor bounds the other away from zero)
        m = max(alpha, beta)
        return sf_greater(
            TriFuzzy((a.center - b.center) / m, alpha / m),
            TriFuzzy(0.0, beta / m),
            cfg,
        )
    if cfg.mode == "grid":
        return _sf_grid(a, b, cfg.grid_resolution, cfg.tnorm)
    return float(_sf_product_exact_batch(a.center - b.center, alpha, beta))


def sf_less(a: TriFuzzy, b: TriFuzzy, cfg: SFConfig | None = None) -> float:
    """Truth degree of "a falls below b"; complements sf_greater exactly."""
    if a.is_crisp and b.is_crisp and a.center == b.center:
        return 0.5
    return 1.0 - sf_greater(a, b, cfg)


def sf_greater_oracle(
    a: TriFuzzy, b: TriFuzzy, resolution: int, tnorm: str = "product"
) -> float:
    """Direct Riemann-sum evaluation of the comparison degree.

    Independent of the closed form: it samples both memberships on midpoint
    grids over their supports and accumulates the raw double sum.  Accuracy
    is O(1/resolution); intended as a cross-check, not for production use.
    """
    if tnorm not in _TNORMS:
        raise ValueError(f"tnorm must be one of {_TNORMS}, got {tnorm!r}")
    if not isinstance(resolution, int) or resolution < 64:
        raise ValueError(f"resolution must be an int >= 64, got {resolution!r}")
    if a.is_crisp and b.is_crisp:
        if a.center > b.center:
            return 1.0
        if a.center < b.center:
            return 0.0
        return 0.5
    return _sf_grid(a, b, resolution, tnorm)


def _midpoints(lo: float, hi: float, n: int) -> tuple[np.ndarray, float]:
    step = (hi - lo) / n
    return lo + step * (np.arange(n) + 0.5), step


def _sf_grid(a: TriFuzzy, b: TriFuzzy, resolution: int, tnorm: str) -> float:
    if a.is_crisp:
        ys, _ = _midpoints(*b.support, resolution)
        wb = membership(b, ys)
        return float(wb[ys < a.center].sum() / wb.sum())
    if b.is_crisp:
        xs, _ = _midpoints(*a.support, resolution)
        wa = membership(a, xs)
        return float(wa[xs > b.center].sum() / wa.sum())

    xs, dx = _midpoints(*a.support, resolution)
    ys, dy = _midpoints(*b.support, resolution)
    wa = membership(a, xs)
    wb = membership(b, ys)
    if tnorm == "product":
        # the indicator x > y factorizes the double sum into a tail lookup
        tail = np.concatenate([np.cumsum(wa[::-1])[::-1], [0.0]])
        first_above = np.searchsorted(xs, ys, side="right")
        num = float((wb * tail[first_above]).sum()) * dx * dy
        den = float(wa.sum()) * dx * float(wb.sum()) * dy
        return num / den
    num = 0.0
    den = 0.0
    chunk = max(1, (1 << 22) // resolution)  # bound the broadcast block size
    for start in range(0, resolution, chunk):
        yblock = ys[start : start + chunk, None]
        wblock = np.minimum(wa[None, :], wb[start : start + chunk, None])
        den += float(wblock.sum())
        num += float((wblock * (xs[None, :] > yblock)).sum())
    return num / den


def _sf_product_exact_batch(d, alpha, beta) -> np.ndarray:
    """Vectorized exact product-T-norm SF for batches of operand pairs.

    ``d`` is the center difference (a minus b), ``alpha``/``beta`` the two
    half-widths.  Matches the scalar path to rounding error; used by the
    stability pipeline to evaluate thousands of comparisons per call.
    """
    d, alpha, beta = np.broadcast_arrays(
        np.asarray(d, dtype=float),
        np.asarray(alpha, dtype=float),
        np.asarray(beta, dtype=float),
    )
    shape = d.shape
    d, alpha, beta = d.ravel(), alpha.ravel(), beta.ravel()
    # step comparison is the right default for every disjoint or crisp pair
    out = np.where(d > 0.0, 1.0, np.where(d < 0.0, 0.0, 0.5))

    # same point-mass rule as the scalar path: crisp, or negligible width
    a_point = alpha < _POINTLIKE_RATIO * beta
    if a_point.any():
        out[a_point] = _tri_left_fraction(d[a_point] / beta[a_point])
    b_point = beta < _POINTLIKE_RATIO * alpha
    if b_point.any():
        out[b_point] = 1.0 - _tri_left_fraction(-d[b_point] / alpha[b_point])

    # equal centers stay on the 0.5 default: symmetry makes that exact
    overlapping = (
        (alpha > 0.0)
        & (beta > 0.0)
        & ~a_point
        & ~b_point
        & (d != 0.0)
        & (d - alpha < beta)
        & (d + alpha > -beta)
    )
    denom = alpha * beta
    general = overlapping & (denom > 0.0)
    degenerate = overlapping & (denom == 0.0)
    if degenerate.any():
        # width product underflowed; defer to the scalar path, which
        # renormalizes such pairs
        for k in np.nonzero(degenerate)[0]:
            out[k] = sf_greater(
                TriFuzzy(d[k], alpha[k]), TriFuzzy(0.0, beta[k])
            )
    if general.any():
        dg = d[general][:, None]
        ag = alpha[general][:, None]
        bg = beta[general][:, None]
        cuts = np.concatenate(
            [
                np.broadcast_to(-bg, dg.shape),
                np.zeros_like(dg),
                np.broadcast_to(bg, dg.shape),
                np.clip(dg - ag, -bg, bg),
                np.clip(dg, -bg, bg),
                np.clip(dg + ag, -bg, bg),
            ],
            axis=1,
        )
        cuts.sort(axis=1)
        half = 0.5 * (cuts[:, 1:] - cuts[:, :-1])
        mid = 0.5 * (cuts[:, 1:] + cuts[:, :-1])
        # two-point Gauss nodes integrate each cubic segment exactly
        offset = half / np.sqrt(3.0)
        nodes = np.stack([mid - offset, mid + offset], axis=-1)
        mu_b = np.maximum(0.0, 1.0 - np.abs(nodes) / bg[..., None])
        tail = ag[..., None] * (
            1.0 - _tri_left_fraction((nodes - dg[..., None]) / ag[..., None])
        )
        numerator = (half * (mu_b * tail).sum(axis=-1)).sum(axis=1)
        out[general] = np.clip(numerator / denom[general], 0.0, 1.0)
    return out.reshape(shape)
