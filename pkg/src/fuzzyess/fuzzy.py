"""Symmetric triangular fuzzy numbers and their closed-form arithmetic.

``TriFuzzy(center, half_width)`` models a quantity that is "about center":
membership peaks at 1 on the center and falls off linearly, reaching 0 at
``center ± half_width``.  A zero half-width degenerates to a crisp real
number whose membership is the indicator of the center.

For this shape the sup-min extension of nonnegative scaling and of addition
has a closed form that acts coordinatewise on (center, half_width), so no
grid arithmetic is ever needed inside the solver.  The grid construction is
still available in the test suite as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["TriFuzzy", "membership", "scale", "add"]


@dataclass(frozen=True)
class TriFuzzy:
    """A symmetric triangular fuzzy number.

    Attributes:
        center: location of full membership.
        half_width: distance from the center to either support endpoint;
            must be nonnegative, and 0 means the value is crisp.
    """

    center: float
    half_width: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "center", float(self.center))
        object.__setattr__(self, "half_width", float(self.half_width))
        if not (np.isfinite(self.center) and np.isfinite(self.half_width)):
            raise ValueError("TriFuzzy fields must be finite numbers")
        if self.half_width < 0.0:
            raise ValueError(f"half_width must be >= 0, got {self.half_width}")

    @property
    def is_crisp(self) -> bool:
        return self.half_width == 0.0

    @property
    def support(self) -> tuple[float, float]:
        """Closed interval outside which membership is identically zero."""
        return (self.center - self.half_width, self.center + self.half_width)

    def membership(self, x):
        return membership(self, x)

    def polyline(self) -> list[tuple[float, float]]:
        """Vertices (x, membership) tracing the membership graph.

        Crisp values are rendered as a zero-width spike so they remain
        visible when plotted next to genuinely fuzzy payoffs.
        """
        lo, hi = self.support
        return [(lo, 0.0), (self.center, 1.0), (hi, 0.0)]

    def __repr__(self) -> str:
        return f"TriFuzzy({self.center:g}, {self.half_width:g})"


def membership(f: TriFuzzy, x):
    """Membership degree of ``x`` in ``f``; accepts scalars or arrays."""
    arr = np.asarray(x, dtype=float)
    if f.half_width == 0.0:
        out = np.where(arr == f.center, 1.0, 0.0)
    else:
        # the quotient may overflow for subnormal widths; the resulting
        # inf still clamps to membership 0, so silence the warning only
        with np.errstate(over="ignore"):
            out = np.maximum(0.0, 1.0 - np.abs(arr - f.center) / f.half_width)
    if arr.ndim == 0:
        return float(out)
    return out


def scale(f: TriFuzzy, c: float) -> TriFuzzy:
    """Multiply ``f`` by a nonnegative crisp constant.

    Scaling by zero collapses to the crisp 0: the support of ``0 * f`` is
    the single point 0 whatever the original spread was.
    """
    c = float(c)
    if not np.isfinite(c) or c < 0.0:
        raise ValueError(f"scale factor must be a finite value >= 0, got {c}")
    if c == 0.0:
        return TriFuzzy(0.0, 0.0)
    return TriFuzzy(c * f.center, c * f.half_width)


def add(f: TriFuzzy, g: TriFuzzy) -> TriFuzzy:
    """Sum of two symmetric triangular fuzzy numbers.

    Centers add and half-widths add; this is exactly the sup-min
    convolution of the two membership functions.
    """
    return TriFuzzy(f.center + g.center, f.half_width + g.half_width)
