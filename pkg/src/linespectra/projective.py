"""Projective points, lines, configurations, and spanned-line spectra.

Points and line keys are homogeneous coordinate triples over one exact field,
canonicalized so the first nonzero coordinate is 1; equal projective objects
are therefore structurally equal and hash alike.  Collinearity is the exact
vanishing of a 3x3 determinant.  spanned_lines enumerates the O(n^2) point
pairs and groups them by canonical line key; oracle_spanned_lines is the
deliberately naive cross-check that retests membership of every other point
with collinear() and must agree everywhere.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Dict, FrozenSet, Sequence

from .fields import (
    FieldDescriptor,
    FieldElement,
    FieldError,
    FieldMismatchError,
    RATIONAL,
    _mul_intvec,
    _screen,
    rational_field,
)


class GeometryError(ValueError):
    """Invalid geometric construction (zero vector, duplicate points, ...)."""


class DuplicatePointError(GeometryError):
    pass


def _coerce_triple(coords, field: FieldDescriptor | None):
    items = list(coords)
    if len(items) != 3:
        raise GeometryError(f"homogeneous triple wants 3 coordinates, got {len(items)}")
    for c in items:
        if isinstance(c, FieldElement):
            if field is None:
                field = c.field
            elif c.field != field:
                raise FieldMismatchError("mixed fields in one coordinate triple")
    if field is None:
        field = rational_field()
    out = tuple(
        c if isinstance(c, FieldElement) else field.from_rational(c) for c in items
    )
    return field, out


class _HomogeneousTriple:
    """Shared canonical form for points and line keys."""

    __slots__ = ("field", "coords", "_intvecs", "_images", "_hash")

    def __init__(self, coords, field: FieldDescriptor | None = None):
        fld, triple = _coerce_triple(coords, field)
        pivot = next((i for i, c in enumerate(triple) if not c.is_zero()), None)
        if pivot is None:
            raise GeometryError("the zero triple is not projective")
        inv = triple[pivot].inverse()
        canon = []
        for i, c in enumerate(triple):
            if i < pivot:
                canon.append(fld.zero())
            elif i == pivot:
                canon.append(fld.one())
            else:
                canon.append(c * inv)
        object.__setattr__(self, "field", fld)
        object.__setattr__(self, "coords", tuple(canon))
        object.__setattr__(self, "_intvecs", None)
        object.__setattr__(self, "_images", None)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError(f"{type(self).__name__} is immutable")

    # integer-cleared coordinate vectors (denominators removed; the common
    # positive scale is projectively irrelevant)
    @property
    def intvecs(self):
        cached = self._intvecs
        if cached is None:
            dens = [c.den for c in self.coords]
            lcm = math.lcm(*dens)
            cached = tuple(
                tuple(x * (lcm // c.den) for x in c.nums) for c in self.coords
            )
            object.__setattr__(self, "_intvecs", cached)
        return cached

    @property
    def images(self):
        """Coordinates reduced into GF(p) through the field's screen."""
        cached = self._images
        if cached is None:
            p, basis = _screen(self.field)
            out = []
            for vec in self.intvecs:
                total = 0
                for c, b in zip(vec, basis):
                    if c:
                        total += c * b
                out.append(total % p)
            cached = tuple(out)
            object.__setattr__(self, "_images", cached)
        return cached

    def sort_token(self):
        return tuple(
            (c.nums, c.den) for c in self.coords
        )

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((type(self).__name__, self.field, self.coords))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        inner = " : ".join(repr(c) for c in self.coords)
        return f"{type(self).__name__}({inner})"


class ProjectivePoint(_HomogeneousTriple):
    pass


class LineKey(_HomogeneousTriple):
    """Canonical dual triple (a : b : c) of the line ax + by + cz = 0."""


def collinear(p: ProjectivePoint, q: ProjectivePoint, r: ProjectivePoint) -> bool:
    """Exact test: do three points lie on one line?

    A fast reduction into GF(p) rejects most non-collinear triples; a zero
    image is always confirmed with the exact integer determinant, so the
    answer is exact in both directions.
    """
    fld = p.field
    if q.field != fld or r.field != fld:
        raise FieldMismatchError("collinear wants three points over one field")
    sp, sq, sr = p.images, q.images, r.images
    prime, _ = _screen(fld)
    det = (
        sp[0] * (sq[1] * sr[2] - sq[2] * sr[1])
        - sp[1] * (sq[0] * sr[2] - sq[2] * sr[0])
        + sp[2] * (sq[0] * sr[1] - sq[1] * sr[0])
    ) % prime
    if det:
        return False
    a, b, c = p.intvecs, q.intvecs, r.intvecs
    mul = _mul_intvec
    for i, j, k in ((0, 1, 2), (1, 0, 2), (2, 0, 1)):
        cof = tuple(
            x - y for x, y in zip(mul(fld, b[j], c[k]), mul(fld, b[k], c[j]))
        )
        term = mul(fld, a[i], cof)
        if i == 0:
            acc = list(term)
        elif i == 1:
            acc = [x - y for x, y in zip(acc, term)]
        else:
            acc = [x + y for x, y in zip(acc, term)]
    return not any(acc)


def line_through(p: ProjectivePoint, q: ProjectivePoint) -> LineKey:
    """Canonical key of the unique line through two distinct points."""
    if p.field != q.field:
        raise FieldMismatchError("line_through wants two points over one field")
    a, b = p.coords, q.coords
    cross = (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )
    if all(c.is_zero() for c in cross):
        raise GeometryError("line_through wants two distinct points")
    return LineKey(cross, p.field)


@dataclass(frozen=True)
class Configuration:
    """A finite list of distinct projective points over one field."""

    field: FieldDescriptor
    points: tuple
    label: str = ""

    def __post_init__(self):
        if not self.points:
            raise GeometryError("a configuration needs at least one point")
        pts = tuple(
            p if isinstance(p, ProjectivePoint) else ProjectivePoint(p, self.field)
            for p in self.points
        )
        for p in pts:
            if p.field != self.field:
                raise FieldMismatchError("configuration points must share its field")
        if len(set(pts)) != len(pts):
            seen = set()
            for i, p in enumerate(pts):
                if p in seen:
                    raise DuplicatePointError(
                        f"duplicate point at index {i}: {p!r}"
                    )
                seen.add(p)
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return len(self.points)

    def is_real(self) -> bool:
        return all(c.is_real() for p in self.points for c in p.coords)


@dataclass(frozen=True)
class LineSpectrum:
    """Line-size counts l_i plus the derived totals of one configuration."""

    n: int
    ell: dict
    total_lines: int
    incidences: int
    max_collinear: int
    degrees: tuple

    def count(self, i: int) -> int:
        return self.ell.get(i, 0)

    def rich_line_count(self, k: int) -> int:
        return sum(c for i, c in self.ell.items() if i >= k)


# ---------------------------------------------------------------------------
# Spanned lines.

def _pair_chunks(n: int, workers: int):
    rows = list(range(n - 1))
    if workers <= 1:
        return [rows]
    return [rows[w::workers] for w in range(workers)]


def _span_generic_chunk(points, rows):
    local: Dict[LineKey, set] = {}
    n = len(points)
    for i in rows:
        p = points[i]
        for j in range(i + 1, n):
            key = line_through(p, points[j])
            members = local.get(key)
            if members is None:
                local[key] = {i, j}
            else:
                members.add(i)
                members.add(j)
    return local


def _primitive_cross(u, v):
    a = u[1] * v[2] - u[2] * v[1]
    b = u[2] * v[0] - u[0] * v[2]
    c = u[0] * v[1] - u[1] * v[0]
    g = math.gcd(math.gcd(a, b), c)
    if g:
        a //= g
        b //= g
        c //= g
    if a < 0 or (a == 0 and (b < 0 or (b == 0 and c < 0))):
        a, b, c = -a, -b, -c
    return a, b, c


def _span_rational_chunk(triples, rows):
    local: Dict[tuple, set] = {}
    n = len(triples)
    for i in rows:
        u = triples[i]
        for j in range(i + 1, n):
            key = _primitive_cross(u, triples[j])
            members = local.get(key)
            if members is None:
                local[key] = {i, j}
            else:
                members.add(i)
                members.add(j)
    return local


def _flat_triples(config: Configuration):
    # rational coordinates cleared to plain integer triples
    return [tuple(v[0] for v in p.intvecs) for p in config.points]


def spanned_lines(config: Configuration, workers: int = 1):
    """Map each spanned line's canonical key to the frozenset of indices of
    the configuration points on it.  `workers` only partitions the pair loop;
    it never changes the result."""
    n = config.n
    if n < 2:
        return {}
    workers = max(1, int(workers))
    if config.field.kind == RATIONAL:
        triples = _flat_triples(config)
        chunks = _pair_chunks(n, workers)
        if len(chunks) == 1:
            parts = [_span_rational_chunk(triples, chunks[0])]
        else:
            with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
                parts = list(
                    pool.map(lambda rows: _span_rational_chunk(triples, rows), chunks)
                )
        merged: Dict[tuple, set] = {}
        for part in parts:
            for key, members in part.items():
                if key in merged:
                    merged[key].update(members)
                else:
                    merged[key] = members
        fld = config.field
        out = {
            LineKey([Fraction(a), Fraction(b), Fraction(c)], fld): frozenset(members)
            for (a, b, c), members in merged.items()
        }
    else:
        chunks = _pair_chunks(n, workers)
        points = config.points
        if len(chunks) == 1:
            parts = [_span_generic_chunk(points, chunks[0])]
        else:
            with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
                parts = list(
                    pool.map(lambda rows: _span_generic_chunk(points, rows), chunks)
                )
        out = {}
        merged_g: Dict[LineKey, set] = {}
        for part in parts:
            for key, members in part.items():
                if key in merged_g:
                    merged_g[key].update(members)
                else:
                    merged_g[key] = members
        out = {key: frozenset(members) for key, members in merged_g.items()}
    return dict(sorted(out.items(), key=lambda kv: kv[0].sort_token()))


def oracle_spanned_lines(config: Configuration):
    """Independent brute-force route: for every pair, membership of every
    other point is decided by collinear().  Quadratic in pairs; used to
    cross-check spanned_lines."""
    n = config.n
    if n < 2:
        return {}
    points = config.points
    out: Dict[LineKey, FrozenSet[int]] = {}
    for i in range(n - 1):
        for j in range(i + 1, n):
            key = line_through(points[i], points[j])
            if key in out:
                continue
            members = {i, j}
            for k in range(n):
                if k != i and k != j and collinear(points[i], points[j], points[k]):
                    members.add(k)
            out[key] = frozenset(members)
    return dict(sorted(out.items(), key=lambda kv: kv[0].sort_token()))


# ---------------------------------------------------------------------------
# Spectrum.

_LEAN_THRESHOLD = 600


def _size_from_pair_count(c: int) -> int:
    k = (1 + math.isqrt(1 + 8 * c)) // 2
    if k * (k - 1) != 2 * c:
        raise GeometryError("pair count is not triangular; grouping is broken")
    return k


def _spectrum_lean(config: Configuration) -> LineSpectrum:
    """Counting-only path for large rational configurations: primitive integer
    keys are packed, sorted, and run-length counted; degrees use exact scaled
    integer accumulation.  No per-line membership sets are materialized."""
    triples = _flat_triples(config)
    n = len(triples)
    bound = max(abs(x) for t in triples for x in t)
    m = 2 * bound * bound + 1
    shift = 2 * m + 1

    packed = []
    append = packed.append
    for i in range(n - 1):
        u = triples[i]
        for j in range(i + 1, n):
            a, b, c = _primitive_cross(u, triples[j])
            append(((a + m) * shift + (b + m)) * shift + (c + m))
    packed.sort()

    ell: Dict[int, int] = {}
    big_lines: Dict[int, int] = {}
    total = 0
    run_start = 0
    count = len(packed)
    for idx in range(1, count + 1):
        if idx == count or packed[idx] != packed[run_start]:
            pairs = idx - run_start
            k = _size_from_pair_count(pairs)
            ell[k] = ell.get(k, 0) + 1
            if k > 2:
                big_lines[packed[run_start]] = k
            total += 1
            run_start = idx
    del packed

    max_collinear = max(ell) if ell else (1 if n == 1 else 0)
    incidences = sum(i * c for i, c in ell.items())

    scale = math.lcm(*range(1, max(max_collinear, 2)))
    deg_scaled = [0] * n
    for i in range(n - 1):
        u = triples[i]
        for j in range(i + 1, n):
            a, b, c = _primitive_cross(u, triples[j])
            key = ((a + m) * shift + (b + m)) * shift + (c + m)
            k = big_lines.get(key, 2)
            w = scale // (k - 1)
            deg_scaled[i] += w
            deg_scaled[j] += w
    degrees = []
    for d in deg_scaled:
        if d % scale:
            raise GeometryError("degree accumulation is broken")
        degrees.append(d // scale)

    return LineSpectrum(
        n=n,
        ell=ell,
        total_lines=total,
        incidences=incidences,
        max_collinear=max_collinear,
        degrees=tuple(degrees),
    )


def spectrum_from_lines(n: int, lines) -> LineSpectrum:
    ell: Dict[int, int] = {}
    degrees = [0] * n
    for members in lines.values():
        k = len(members)
        ell[k] = ell.get(k, 0) + 1
        for idx in members:
            degrees[idx] += 1
    max_collinear = max(ell) if ell else (1 if n == 1 else 0)
    return LineSpectrum(
        n=n,
        ell=ell,
        total_lines=len(lines),
        incidences=sum(i * c for i, c in ell.items()),
        max_collinear=max_collinear,
        degrees=tuple(degrees),
    )


def spectrum(config: Configuration, workers: int = 1) -> LineSpectrum:
    """Line spectrum of a configuration.  n < 2 yields the empty spectrum."""
    n = config.n
    if n < 2:
        return LineSpectrum(
            n=n, ell={}, total_lines=0, incidences=0,
            max_collinear=min(n, 1), degrees=(0,) * n,
        )
    if config.field.kind == RATIONAL and n >= _LEAN_THRESHOLD:
        return _spectrum_lean(config)
    return spectrum_from_lines(n, spanned_lines(config, workers=workers))


# ---------------------------------------------------------------------------
# Projective maps.

def _as_matrix(field: FieldDescriptor, matrix):
    rows = list(matrix)
    if len(rows) != 3 or any(len(list(r)) != 3 for r in rows):
        raise GeometryError("projective map wants a 3x3 matrix")
    out = []
    for row in rows:
        out.append(
            tuple(
                c if isinstance(c, FieldElement) else field.from_rational(c)
                for c in row
            )
        )
        for c in out[-1]:
            if c.field != field:
                raise FieldMismatchError("matrix entries must share the configuration field")
    return tuple(out)


def matrix_determinant(m) -> FieldElement:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def apply_projective_map(config: Configuration, matrix) -> Configuration:
    """Image of the configuration under an invertible 3x3 matrix over its field."""
    m = _as_matrix(config.field, matrix)
    if matrix_determinant(m).is_zero():
        raise GeometryError("projective map must be invertible (determinant is zero)")
    new_points = []
    for p in config.points:
        x, y, z = p.coords
        new_points.append(
            ProjectivePoint(
                (
                    m[0][0] * x + m[0][1] * y + m[0][2] * z,
                    m[1][0] * x + m[1][1] * y + m[1][2] * z,
                    m[2][0] * x + m[2][1] * y + m[2][2] * z,
                ),
                config.field,
            )
        )
    return Configuration(config.field, tuple(new_points), label=config.label)
