"""Shared numerical machinery.

Exact integration of low-degree piecewise polynomials, monotone bisection,
and prefix-minimum scans.  Everything here is deterministic; the tolerances
used across the solver live either in this module (structural checks) or in
:class:`fuzzyess.satisfaction.SFConfig` (solver-facing knobs).
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np

__all__ = [
    "NumericError",
    "PiecewisePoly",
    "integrate_segments",
    "bisect",
    "prefix_min_scan",
    "CONTINUITY_RTOL",
    "MAX_DEGREE",
]

# relative continuity tolerance enforced at interior breakpoints
CONTINUITY_RTOL = 1e-12
# highest polynomial degree a segment may carry
MAX_DEGREE = 4


class NumericError(RuntimeError):
    """A numerical routine failed to produce a trustworthy result."""


@dataclass(frozen=True)
class PiecewisePoly:
    """Piecewise polynomial with strictly increasing breakpoints.

    ``coeffs[k]`` holds the ascending-power coefficients of segment ``k``,
    valid on ``[breakpoints[k], breakpoints[k + 1]]`` in the global
    coordinate.  Segments are capped at degree ``MAX_DEGREE`` and the curve
    must be continuous across interior breakpoints; both are validated at
    construction time.
    """

    breakpoints: tuple[float, ...]
    coeffs: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        bp = tuple(float(x) for x in self.breakpoints)
        cf = tuple(tuple(float(c) for c in seg) for seg in self.coeffs)
        object.__setattr__(self, "breakpoints", bp)
        object.__setattr__(self, "coeffs", cf)
        if len(bp) < 2:
            raise ValueError("need at least two breakpoints")
        if any(not np.isfinite(x) for x in bp):
            raise ValueError("breakpoints must be finite")
        if any(b2 <= b1 for b1, b2 in zip(bp, bp[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        if len(cf) != len(bp) - 1:
            raise ValueError(
                f"expected {len(bp) - 1} coefficient rows, got {len(cf)}"
            )
        for seg in cf:
            if not seg or len(seg) > MAX_DEGREE + 1:
                raise ValueError(
                    f"segment degree must be between 0 and {MAX_DEGREE}"
                )
        for k, x in enumerate(bp[1:-1], start=1):
            left = _horner(cf[k - 1], x)
            right = _horner(cf[k], x)
            tol = CONTINUITY_RTOL * max(1.0, abs(left), abs(right))
            if abs(left - right) > tol:
                raise ValueError(
                    f"discontinuity {left - right:g} at breakpoint {x:g}"
                )

    @property
    def domain(self) -> tuple[float, float]:
        return (self.breakpoints[0], self.breakpoints[-1])

    def evaluate(self, x):
        """Evaluate at scalar or array ``x`` inside the domain."""
        arr = np.asarray(x, dtype=float)
        lo, hi = self.domain
        if np.any(arr < lo) or np.any(arr > hi):
            raise ValueError(f"evaluation point outside domain [{lo:g}, {hi:g}]")
        idx = np.clip(
            np.searchsorted(self.breakpoints, arr, side="right") - 1,
            0,
            len(self.coeffs) - 1,
        )
        out = np.zeros_like(arr, dtype=float)
        for k, seg in enumerate(self.coeffs):
            mask = idx == k
            if np.any(mask):
                out[mask] = _horner(seg, arr[mask])
        if arr.ndim == 0:
            return float(out)
        return out


def _horner(coeffs: Sequence[float], x):
    acc = np.zeros_like(np.asarray(x, dtype=float)) if np.ndim(x) else 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _antiderivative(coeffs: Sequence[float], x: float) -> float:
    # F(x) = sum c_k x^(k+1) / (k+1), exact for polynomial segments
    acc = 0.0
    for k in reversed(range(len(coeffs))):
        acc = acc * x + coeffs[k] / (k + 1)
    return acc * x


def integrate_segments(poly: PiecewisePoly, lo: float, hi: float) -> float:
    """Exact integral of ``poly`` over ``[lo, hi]`` via antiderivatives."""
    lo, hi = float(lo), float(hi)
    if lo > hi:
        raise ValueError(f"integration bounds out of order: {lo} > {hi}")
    dlo, dhi = poly.domain
    slack = 1e-12 * max(1.0, abs(dlo), abs(dhi))
    if lo < dlo - slack or hi > dhi + slack:
        raise ValueError(
            f"bounds [{lo:g}, {hi:g}] outside domain [{dlo:g}, {dhi:g}]"
        )
    lo, hi = max(lo, dlo), min(hi, dhi)
    total = 0.0
    bp = poly.breakpoints
    for k, seg in enumerate(poly.coeffs):
        a, b = max(bp[k], lo), min(bp[k + 1], hi)
        if a < b:
            total += _antiderivative(seg, b) - _antiderivative(seg, a)
    return total


def bisect(
    f: Callable[[float], float], lo: float, hi: float, tol: float
) -> float:
    """Root of a nonincreasing function by bisection.

    Requires ``f(lo) >= 0 >= f(hi)``; returns the bracket midpoint once the
    bracket is narrower than ``tol``, so at most
    ``ceil(log2((hi - lo) / tol))`` halvings are performed.  Running the
    result through another bisect call changes nothing beyond ``tol``.
    """
    lo, hi = float(lo), float(hi)
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    if lo >= hi:
        raise ValueError(f"empty bracket [{lo}, {hi}]")
    if f(lo) < 0.0 or f(hi) > 0.0:
        raise ValueError("bracket does not satisfy f(lo) >= 0 >= f(hi)")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:  # float exhaustion
            break
        if f(mid) >= 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def prefix_min_scan(
    samples: Sequence[tuple[float, float]],
) -> list[tuple[float, float]]:
    """Running minimum of (x, value) samples sorted by strictly increasing x."""
    xs = [float(x) for x, _ in samples]
    if any(b <= a for a, b in zip(xs, xs[1:])):
        raise ValueError("sample abscissae must be strictly increasing")
    out: list[tuple[float, float]] = []
    running = np.inf
    for x, v in samples:
        running = min(running, float(v))
        out.append((float(x), running))
    return out
