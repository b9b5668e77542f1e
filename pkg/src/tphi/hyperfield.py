"""Exact arithmetic in the tropical phase hyperfield.

A scalar is either zero or a point of the unit circle, stored as a rational
number of turns in ``[0, 1)``.  Multiplication adds angles.  Addition is
multivalued: the sum of two circle points is the smallest closed arc joining
them, the sum of a point with its antipode is the whole hyperfield, and zero
is the neutral element.  Sums of several terms are therefore finite unions
of closed arcs, represented by ``ArcSet``.

Angles and arc endpoints are ``fractions.Fraction`` values throughout, so
every membership and equality question is decided exactly.  All values are
immutable; nothing here keeps hidden state.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import EmptySumError

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class TPhi:
    """Hyperfield scalar: zero (``angle is None``) or ``exp(2*pi*i*angle)``."""

    angle: Fraction | None

    def __post_init__(self):
        if self.angle is not None:
            object.__setattr__(self, "angle", Fraction(self.angle) % 1)

    @property
    def is_zero(self) -> bool:
        return self.angle is None

    def __mul__(self, other: "TPhi") -> "TPhi":
        if not isinstance(other, TPhi):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO
        return TPhi(self.angle + other.angle)

    def __neg__(self) -> "TPhi":
        if self.is_zero:
            return self
        return TPhi(self.angle + HALF)

    def inverse(self) -> "TPhi":
        if self.is_zero:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return TPhi(-self.angle)

    def __repr__(self) -> str:
        return f"TPhi({format_value(self)!r})"


ZERO = TPhi(None)
ONE = TPhi(Fraction(0))


def unit(numerator, denominator=None) -> TPhi:
    """Circle point at ``numerator/denominator`` turns (one arg: any rational)."""
    if denominator is None:
        return TPhi(Fraction(numerator))
    return TPhi(Fraction(numerator, denominator))


def neg(v: TPhi) -> TPhi:
    return -v


def mul(a: TPhi, b: TPhi) -> TPhi:
    return a * b


def phase_key(v: TPhi):
    """Sort key: zero first, then units by increasing angle."""
    if v.is_zero:
        return (0, Fraction(0))
    return (1, v.angle)


def units(k: int) -> list[TPhi]:
    """The k circle points at angles j/k, in angle order."""
    if k < 1:
        raise ValueError("k must be positive")
    return [TPhi(Fraction(j, k)) for j in range(k)]


def scalars(k: int) -> list[TPhi]:
    """Zero followed by the k-th roots of unity; the order matches phase_key."""
    return [ZERO] + units(k)


def in_tphi_k(v: TPhi, k: int) -> bool:
    """Whether v is zero or a k-th root of unity."""
    return v.is_zero or (v.angle * k).denominator == 1


@dataclass(frozen=True)
class ArcSet:
    """Finite union of closed circle arcs, optionally together with zero.

    Canonical form, enforced on construction: ``full`` implies no listed
    arcs; otherwise ``arcs`` holds ``(start, length)`` pairs with
    ``0 <= start < 1`` and ``0 <= length < 1``, pairwise disjoint, not even
    touching at endpoints, sorted by start.  A ``length`` of zero is a
    single circle point.  Arcs run counterclockwise and may wrap past zero
    turns.  Structural equality therefore decides set equality.
    """

    has_zero: bool = False
    full: bool = False
    arcs: tuple[tuple[Fraction, Fraction], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "arcs", _canonical_arcs(self.arcs, self.full))
        if self.full:
            object.__setattr__(self, "arcs", ())
        elif self.arcs == FULL_MARK:
            object.__setattr__(self, "full", True)
            object.__setattr__(self, "arcs", ())

    @property
    def is_empty(self) -> bool:
        return not (self.has_zero or self.full or self.arcs)

    def contains(self, v: TPhi) -> bool:
        if v.is_zero:
            return self.has_zero
        if self.full:
            return True
        return any(_on_arc(s, l, v.angle) for s, l in self.arcs)

    def rotated(self, turns: Fraction) -> "ArcSet":
        """The set multiplied pointwise by the unit at ``turns`` angles."""
        return ArcSet(
            self.has_zero,
            self.full,
            tuple(((s + turns) % 1, l) for s, l in self.arcs),
        )

    def __str__(self) -> str:
        return format_arcset(self)


# Sentinel returned by _canonical_arcs when the listed arcs cover the circle.
FULL_MARK = ((Fraction(0), Fraction(1)),)


def _canonical_arcs(arcs, full: bool):
    if full:
        return ()
    segments = []
    for start, length in arcs:
        start = Fraction(start)
        length = Fraction(length)
        if length < 0:
            raise ValueError("arc length must be non-negative")
        if length >= 1:
            return FULL_MARK
        start %= 1
        end = start + length
        if end > 1:
            segments.append((start, Fraction(1)))
            segments.append((Fraction(0), end - 1))
        else:
            segments.append((start, end))
    if not segments:
        return ()
    segments.sort()
    merged = [segments[0]]
    for start, end in segments[1:]:
        last_start, last_end = merged[-1]
        if start <= last_end:
            if end > last_end:
                merged[-1] = (last_start, end)
        else:
            merged.append((start, end))
    if len(merged) == 1 and merged[0] == (0, 1):
        return FULL_MARK
    if len(merged) > 1 and merged[0][0] == 0 and merged[-1][1] == 1:
        # Touching across the wrap point: fold the last segment around.
        first = merged.pop(0)
        start = merged[-1][0]
        length = 1 - start + first[1]
        if length >= 1:
            return FULL_MARK
        merged[-1] = (start, start + length)
    out = tuple((s, e - s) for s, e in merged)
    return tuple(sorted(out))


def _on_arc(start: Fraction, length: Fraction, angle: Fraction) -> bool:
    return (angle - start) % 1 <= length


EMPTY = ArcSet()
ZERO_ONLY = ArcSet(has_zero=True)
FULL_WITH_ZERO = ArcSet(has_zero=True, full=True)


def arcset_of(v: TPhi) -> ArcSet:
    """The singleton {v} as an ArcSet."""
    if v.is_zero:
        return ZERO_ONLY
    return ArcSet(arcs=((v.angle, Fraction(0)),))


def boxplus_pair(a: TPhi, b: TPhi) -> ArcSet:
    """Multivalued sum of two scalars.

    Zero is neutral, a point plus its antipode is everything, and otherwise
    the sum is the smallest closed arc joining the two points (a single
    point when they coincide).
    """
    if a.is_zero and b.is_zero:
        return ZERO_ONLY
    if a.is_zero:
        return arcset_of(b)
    if b.is_zero:
        return arcset_of(a)
    d = (b.angle - a.angle) % 1
    if d == HALF:
        return FULL_WITH_ZERO
    if d == 0:
        return arcset_of(a)
    if d < HALF:
        return ArcSet(arcs=((a.angle, d),))
    return ArcSet(arcs=((b.angle, 1 - d),))


def _point_with_arc(theta: Fraction, start: Fraction, length: Fraction):
    """Union of pairwise sums of a circle point with every point of an arc.

    Returns None when the antipode of theta lies on the arc, in which case
    the union is the whole hyperfield.  Otherwise the union is the unique
    closed arc that covers the given arc and theta while avoiding the
    antipode.
    """
    anti = (theta + HALF) % 1
    if _on_arc(start, length, anti):
        return None
    if _on_arc(start, length, theta):
        return (start, length)
    lead = (start - theta) % 1
    trail = (theta - (start + length)) % 1
    if 0 < (anti - theta) % 1 < lead:
        return (start, length + trail)
    return (theta, lead + length)


def _extend(acc: ArcSet, t: TPhi) -> ArcSet:
    if t.is_zero:
        return acc
    if acc.full:
        return FULL_WITH_ZERO
    pieces = []
    if acc.has_zero:
        pieces.append((t.angle, Fraction(0)))
    for start, length in acc.arcs:
        hull = _point_with_arc(t.angle, start, length)
        if hull is None:
            return FULL_WITH_ZERO
        pieces.append(hull)
    return ArcSet(has_zero=False, arcs=tuple(pieces))


def boxplus_fold(terms: Sequence[TPhi]) -> ArcSet:
    """Multivalued sum of the terms, folded left to right.

    Each step forms the union of pairwise sums of the accumulated set with
    the next scalar.  The result does not depend on the order; the fold is
    merely an evaluation strategy.
    """
    terms = list(terms)
    if not terms:
        raise EmptySumError("cannot sum an empty sequence of scalars")
    acc = arcset_of(terms[0])
    for t in terms[1:]:
        acc = _extend(acc, t)
    return acc


def contains_zero(terms: Sequence[TPhi]) -> bool:
    """Whether zero lies in the multivalued sum of the terms.

    Decided without folding: after dropping zero terms and duplicates,
    zero is in the sum exactly when two entries are antipodal or when no
    open semicircle contains all entries, i.e. the largest circular gap
    between consecutive entries is under half a turn.  A gap of exactly
    half a turn forces an antipodal pair, so the boundary case is covered
    by the first test.
    """
    terms = list(terms)
    if not terms:
        raise EmptySumError("cannot sum an empty sequence of scalars")
    angles = sorted({t.angle for t in terms if not t.is_zero})
    if not angles:
        return True
    present = set(angles)
    if any((a + HALF) % 1 in present for a in angles):
        return True
    if len(angles) == 1:
        return False
    largest_gap = (angles[0] - angles[-1]) % 1
    for prev, nxt in zip(angles, angles[1:]):
        largest_gap = max(largest_gap, nxt - prev)
    return largest_gap < HALF


def scale_arcset(a: TPhi, s: ArcSet) -> ArcSet:
    """Pointwise product {a * x : x in s}."""
    if s.is_empty:
        return EMPTY
    if a.is_zero:
        return ZERO_ONLY
    return s.rotated(a.angle)


def neg_arcset(s: ArcSet) -> ArcSet:
    """Pointwise negation, i.e. rotation by half a turn."""
    return scale_arcset(TPhi(HALF), s)


def format_value(v: TPhi) -> str:
    if v.is_zero:
        return "0"
    return f"{v.angle.numerator}/{v.angle.denominator}"


def parse_value(text: str) -> TPhi:
    """Parse '0' (zero) or 'p/q' (p/q turns)."""
    text = text.strip()
    if text == "0":
        return ZERO
    parts = text.split("/")
    if len(parts) != 2:
        raise ValueError(f"bad scalar {text!r}: expected '0' or 'p/q'")
    try:
        num, den = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"bad scalar {text!r}: expected '0' or 'p/q'") from None
    if den <= 0:
        raise ValueError(f"bad scalar {text!r}: denominator must be positive")
    return TPhi(Fraction(num, den))


def format_arcset(s: ArcSet) -> str:
    """Render arcs as '[p/q,p'/q']' joined by commas, with FULL / +0 markers."""
    parts = []
    if s.full:
        parts.append("FULL")
    elif s.arcs:
        rendered = []
        for start, length in s.arcs:
            lo = TPhi(start)
            hi = TPhi((start + length) % 1)
            rendered.append(f"[{format_value(lo)},{format_value(hi)}]")
        parts.append(",".join(rendered))
    if s.has_zero:
        parts.append("+0")
    if not parts:
        return "EMPTY"
    return " ".join(parts)


def parse_terms(expr: str) -> list[TPhi]:
    """Parse an expression like '0/1 + 1/2 + 0' into scalars."""
    chunks = [c.strip() for c in expr.split("+")]
    if any(not c for c in chunks):
        raise ValueError(f"bad sum expression {expr!r}")
    return [parse_value(c) for c in chunks]
