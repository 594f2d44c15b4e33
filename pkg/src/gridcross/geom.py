"""Exact predicates for straight segments with endpoints on the integer lattice.

Everything here is integer or rational arithmetic; there are no epsilons and
no floats. Segments are OPEN throughout: endpoints are not part of a segment,
so two segments that merely touch at an endpoint do not intersect.

A point is a plain tuple of ``int`` (lattice point) or ``Fraction`` (rational
point); a segment is an ``(a, b)`` pair of two distinct points of the same
dimension. Works in any dimension d >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from .errors import ValidationError


class CrossKind(Enum):
    """Relation between the open segments of a pair."""

    DISJOINT = "disjoint"
    SHARED_ENDPOINT = "shared-endpoint"
    POINT_CROSS = "point-cross"
    COLLINEAR_OVERLAP = "collinear-overlap"


@dataclass(frozen=True)
class CrossResult:
    kind: CrossKind
    point: tuple | None = None  # crossing point, exact rationals; POINT_CROSS only

    @property
    def is_crossing(self) -> bool:
        """True when the two open segments share at least one point."""
        return self.kind in (CrossKind.POINT_CROSS, CrossKind.COLLINEAR_OVERLAP)


def check_segment(seg):
    a, b = seg
    if len(a) != len(b):
        raise ValidationError(f"segment endpoints differ in dimension: {len(a)} vs {len(b)}")
    if len(a) < 1:
        raise ValidationError("zero-dimensional point")
    if tuple(a) == tuple(b):
        raise ValidationError(f"degenerate segment at {tuple(a)}")


def gcd_reduce(seg):
    """Primitive direction of a segment and the gcd of its coordinate differences.

    Returns (direction, g) with b - a = g * direction and gcd(direction) = 1.
    """
    check_segment(seg)
    a, b = seg
    diffs = [bi - ai for ai, bi in zip(a, b)]
    g = 0
    for x in diffs:
        g = gcd(g, abs(x))
    return tuple(x // g for x in diffs), g


def interior_lattice_points(seg):
    """The g - 1 lattice points strictly between the endpoints, ordered from a to b."""
    direction, g = gcd_reduce(seg)
    a = seg[0]
    return [tuple(ai + k * di for ai, di in zip(a, direction)) for k in range(1, g)]


def point_on_open_segment(p, seg) -> bool:
    """True iff p = a + t(b - a) for some rational 0 < t < 1.

    p may have int or Fraction coordinates. Uses cross-multiplication only,
    so no Fraction objects are built for lattice inputs.
    """
    check_segment(seg)
    a, b = seg
    if len(p) != len(a):
        raise ValidationError(f"point/segment dimension mismatch: {len(p)} vs {len(a)}")
    ref = None  # (numerator, denominator) of t from the first coordinate with slope
    for pi, ai, bi in zip(p, a, b):
        di = bi - ai
        ni = pi - ai
        if di == 0:
            if ni != 0:
                return False
        elif ref is None:
            # 0 < ni/di < 1
            if di > 0:
                if not (0 < ni < di):
                    return False
            else:
                if not (di < ni < 0):
                    return False
            ref = (ni, di)
        else:
            if ni * ref[1] != ref[0] * di:
                return False
    return ref is not None


def segments_cross(s1, s2) -> CrossResult:
    """Classify the intersection of two open segments, exactly.

    Solves a + t(b-a) = c + s(d-c) over the rationals. A unique solution with
    both parameters strictly inside (0, 1) is a POINT_CROSS (the point is
    returned with Fraction coordinates). Collinear segments whose open
    intervals overlap are COLLINEAR_OVERLAP. Closed segments meeting in a
    single point that is an endpoint of at least one of them are
    SHARED_ENDPOINT; anything else is DISJOINT. Symmetric in its arguments.
    """
    check_segment(s1)
    check_segment(s2)
    (a, b), (c, d) = s1, s2
    if len(a) != len(c):
        raise ValidationError(f"segment dimension mismatch: {len(a)} vs {len(c)}")
    dim = len(a)
    u = [bi - ai for ai, bi in zip(a, b)]
    v = [di - ci for ci, di in zip(c, d)]
    w = [ci - ai for ai, ci in zip(a, c)]

    # Look for an invertible 2x2 minor of the system t*u - s*v = w.
    piv = None
    for i in range(dim):
        for j in range(i + 1, dim):
            det = v[i] * u[j] - u[i] * v[j]
            if det != 0:
                piv = (i, j, det)
                break
        if piv is not None:
            break

    if piv is None:
        return _cross_parallel(a, d, u, w, dim)

    i, j, det = piv
    tn = v[i] * w[j] - w[i] * v[j]
    sn = u[i] * w[j] - w[i] * u[j]
    for k in range(dim):
        if tn * u[k] - sn * v[k] != det * w[k]:
            return CrossResult(CrossKind.DISJOINT)  # skew supports
    if det < 0:
        det, tn, sn = -det, -tn, -sn
    if 0 < tn < det and 0 < sn < det:
        t = Fraction(tn, det)
        point = tuple(ai + t * ui for ai, ui in zip(a, u))
        return CrossResult(CrossKind.POINT_CROSS, point)
    if 0 <= tn <= det and 0 <= sn <= det:
        # closed segments touch in exactly one point, at a parameter boundary
        return CrossResult(CrossKind.SHARED_ENDPOINT)
    return CrossResult(CrossKind.DISJOINT)


def _cross_parallel(a, d, u, w, dim):
    # Parallel directions: crossing requires a common support line.
    for i in range(dim):
        for j in range(i + 1, dim):
            if u[i] * w[j] - w[i] * u[j] != 0:
                return CrossResult(CrossKind.DISJOINT)
    # Collinear: compare the parameter intervals along u.
    r = 0
    for i in range(1, dim):
        if abs(u[i]) > abs(u[r]):
            r = i
    span = u[r]
    pc = w[r]
    pd = d[r] - a[r]
    if span < 0:
        span, pc, pd = -span, -pc, -pd
    lo, hi = (pc, pd) if pc <= pd else (pd, pc)
    inner_lo = lo if lo > 0 else 0
    inner_hi = hi if hi < span else span
    if inner_lo < inner_hi:
        return CrossResult(CrossKind.COLLINEAR_OVERLAP)
    if inner_lo == inner_hi:
        return CrossResult(CrossKind.SHARED_ENDPOINT)
    return CrossResult(CrossKind.DISJOINT)
