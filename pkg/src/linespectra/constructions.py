"""Generators for the named extremal point configurations.

Each generator returns a Configuration over the smallest field of the
supported kinds that represents its coordinates exactly.  Where a family has
a closed-form line spectrum, expected_spectrum returns it (with the small-m
bucket merges applied), so generated output can be verified without running
the spectrum computation.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Dict, Optional

from .fields import FieldDescriptor, cyclotomic_field, rational_field
from .projective import Configuration, GeometryError, ProjectivePoint


class ConstructionError(ValueError):
    pass


def _require(cond: bool, msg: str):
    if not cond:
        raise ConstructionError(msg)


# ---------------------------------------------------------------------------
# Trigonometric helpers over Q(zeta_L): exact cos/sin of multiples of 2*pi/L.

def _trig_field(m: int) -> FieldDescriptor:
    return cyclotomic_field(math.lcm(4, 2 * m))


def _cos_sin(field: FieldDescriptor, numerator: int):
    """Exact (cos, sin) of the angle 2*pi*numerator/L in Q(zeta_L), 4 | L."""
    L = field.N
    z = field.zeta()
    k = numerator % L
    zk = z ** k
    zmk = z ** ((L - k) % L)
    half = field.from_rational(Fraction(1, 2))
    neg_i = z ** (3 * L // 4)  # 1/i
    return (zk + zmk) * half, (zk - zmk) * half * neg_i


def fermat(m: int) -> Configuration:
    """3m points on the coordinate triangle over Q(zeta_m): for j < m the
    points (1 : -w^j : 0), (0 : 1 : -w^j), (-w^j : 0 : 1) where w = zeta_m.
    A cross triple (a, b, c), one point per side, is collinear exactly when
    a + b + c = 0 (mod m); the three side lines carry m points each."""
    _require(m >= 3, f"fermat wants m >= 3, got {m}")
    field = cyclotomic_field(m)
    one, zero = field.one(), field.zero()
    w = field.zeta()
    pts = []
    powers = [w ** j for j in range(m)]
    for j in range(m):
        pts.append(ProjectivePoint((one, -powers[j], zero), field))
    for j in range(m):
        pts.append(ProjectivePoint((zero, one, -powers[j]), field))
    for j in range(m):
        pts.append(ProjectivePoint((-powers[j], zero, one), field))
    return Configuration(field, tuple(pts), label=f"fermat(m={m})")


def boroczky(m: int) -> Configuration:
    """2m real points: m on the unit circle at angles 2*pi*j/m and the m
    directions (-sin(pi*k/m) : cos(pi*k/m) : 0) on the line at infinity.
    The chord through circle points a and b meets infinity at k = a + b
    (mod m); the tangent at a meets it at k = 2a (mod m)."""
    _require(m >= 3, f"boroczky wants m >= 3, got {m}")
    field = _trig_field(m)
    L = field.N
    one, zero = field.one(), field.zero()
    pts = []
    for j in range(m):
        c, s = _cos_sin(field, j * (L // m))
        pts.append(ProjectivePoint((c, s, one), field))
    for k in range(m):
        c, s = _cos_sin(field, k * (L // (2 * m)))
        pts.append(ProjectivePoint((-s, c, zero), field))
    return Configuration(field, tuple(pts), label=f"boroczky(m={m})")


def sylvester_cubic(k: int) -> Configuration:
    """Group construction on the acnodal cubic y^2 z = x^3 - x^2 z, whose
    smooth real points form a circle group: with m = 2k and
    t_j = -cot(pi*j/m), the points P_j = (t_j^2 + 1 : t_j^3 + t_j : 1) for
    0 < j < m plus P_0 = (0 : 1 : 0) satisfy "P_a, P_b, P_c collinear iff
    a + b + c = 0 (mod m)" (a line meets the cubic three times, so no four
    are collinear).  This gives roughly n^2/6 spanned lines.  A cusp-model
    cubic cannot do that: its smooth points form the torsion-free group
    (R, +), which caps the three-point-line density well below n^2/6; hence
    the acnodal model."""
    _require(k >= 2, f"sylvester_cubic wants k >= 2, got {k}")
    m = 2 * k
    field = _trig_field(m)
    L = field.N
    one, zero = field.one(), field.zero()
    pts = [ProjectivePoint((zero, one, zero), field)]
    for j in range(1, m):
        c, s = _cos_sin(field, j * (L // (2 * m)))
        t = -c / s
        pts.append(ProjectivePoint((t * t + 1, t * t * t + t, one), field))
    return Configuration(field, tuple(pts), label=f"sylvester_cubic(k={k})")


# Historical alias: the generator originally modeled a cuspidal cubic, whose
# group (R, +) provably cannot reach the ~n^2/6 spanned-line density; the
# acnodal group model replaced it.  Same signature, n = 2k points.
cuspidal_cubic = sylvester_cubic


def two_lines(m: int) -> Configuration:
    """2m rational points, m on each coordinate axis: (j, 0) and (0, j) for
    j = 1..m.  Every cross line carries exactly two points."""
    _require(m >= 2, f"two_lines wants m >= 2, got {m}")
    field = rational_field()
    pts = [ProjectivePoint((j, 0, 1), field) for j in range(1, m + 1)]
    pts += [ProjectivePoint((0, j, 1), field) for j in range(1, m + 1)]
    return Configuration(field, tuple(pts), label=f"two_lines(m={m})")


def near_pencil(n: int) -> Configuration:
    """n - 1 collinear points (j, 0) for j = 1..n-1 plus the apex (0, 1)."""
    _require(n >= 3, f"near_pencil wants n >= 3, got {n}")
    field = rational_field()
    pts = [ProjectivePoint((j, 0, 1), field) for j in range(1, n)]
    pts.append(ProjectivePoint((0, 1, 1), field))
    return Configuration(field, tuple(pts), label=f"near_pencil(n={n})")


def grid(a: int, b: int) -> Configuration:
    """The a x b integer grid [0, a) x [0, b)."""
    _require(a >= 2 and b >= 2, f"grid wants a, b >= 2, got {a}x{b}")
    field = rational_field()
    pts = tuple(
        ProjectivePoint((x, y, 1), field) for x in range(a) for y in range(b)
    )
    return Configuration(field, pts, label=f"grid(a={a},b={b})")


def random_config(n: int, seed: int, bound: Optional[int] = None) -> Configuration:
    """n distinct integer points drawn uniformly from [0, bound)^2 with a
    deterministic seeded generator (same seed, same configuration, on every
    platform)."""
    _require(n >= 1, f"random_config wants n >= 1, got {n}")
    if bound is None:
        bound = 4 * n
    _require(bound >= n, f"bound {bound} leaves too little room for {n} distinct points")
    rng = random.Random(seed)
    seen = set()
    order = []
    while len(order) < n:
        pt = (rng.randrange(bound), rng.randrange(bound))
        if pt not in seen:
            seen.add(pt)
            order.append(pt)
    field = rational_field()
    pts = tuple(ProjectivePoint((x, y, 1), field) for x, y in order)
    return Configuration(
        field, pts, label=f"random(n={n},seed={seed},bound={bound})"
    )


# ---------------------------------------------------------------------------
# Closed-form spectra (with the small-parameter bucket merges).

def expected_spectrum(name: str, **params) -> Optional[Dict[int, int]]:
    """Known exact line spectrum {i: l_i} for a generator call, or None when
    the family has no closed form here (grid, random)."""
    if name == "fermat":
        m = params["m"]
        if m == 3:
            return {3: 12}
        return {3: m * m, m: 3}
    if name == "boroczky":
        m = params["m"]
        chords = m * (m - 1) // 2
        if m == 3:
            return {2: 3, 3: chords + 1}
        if m == 4:
            return {2: 4, 3: chords, 4: 1}
        return {2: m, 3: chords, m: 1}
    if name in ("sylvester_cubic", "cuspidal_cubic"):
        m = 2 * params["k"]
        g = 3 if m % 3 == 0 else 1
        triples = (m * m - 3 * m + 2 * g) // 6
        out = {3: triples}
        ordinary = m - g
        if ordinary:
            out[2] = ordinary
        return out
    if name == "two_lines":
        m = params["m"]
        if m == 2:
            return {2: 6}
        return {2: m * m, m: 2}
    if name == "near_pencil":
        n = params["n"]
        if n == 3:
            return {2: 3}
        return {2: n - 1, n - 1: 1}
    return None


GENERATORS = {
    "fermat": fermat,
    "boroczky": boroczky,
    "sylvester_cubic": sylvester_cubic,
    "cuspidal_cubic": cuspidal_cubic,
    "two_lines": two_lines,
    "near_pencil": near_pencil,
    "grid": grid,
    "random": random_config,
}
