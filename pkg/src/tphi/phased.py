"""Phased vectors and their matroid data.

A phased vector is a fixed-length tuple of hyperfield scalars.  This module
answers orthogonality questions (is zero in the multivalued dot product),
enumerates discretized orthogonal sets, evaluates and verifies strong
Grassmann-Plucker functions, and builds the transposition transversal used
to coordinatize spaces of such functions.

Ground-set indices are 1-based.  Vector positions are 0-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    BadArityError,
    IdenticallyZeroError,
    IndexOutOfRangeError,
    LengthMismatchError,
    OddDiscretizationError,
    ZeroVectorError,
)
from .hyperfield import (
    TPhi,
    ZERO,
    contains_zero,
    format_value,
    in_tphi_k,
    parse_value,
    phase_key,
    scalars,
    unit,
)

PhasedVector = tuple

HALF_TURN = unit(1, 2)


def support(x: PhasedVector) -> frozenset:
    """0-based positions of the non-zero entries."""
    return frozenset(i for i, e in enumerate(x) if not e.is_zero)


def vector_key(x: PhasedVector):
    return tuple(phase_key(e) for e in x)


def format_vector(x: PhasedVector) -> str:
    return ",".join(format_value(e) for e in x)


def parse_vector(text: str) -> PhasedVector:
    return tuple(parse_value(c) for c in text.strip().split(","))


def perp_membership(vs: Sequence[PhasedVector], x: PhasedVector) -> bool:
    """Whether x is orthogonal to every vector in vs.

    Orthogonality to v means zero lies in the multivalued sum of the
    entrywise products v_i * x_i.
    """
    if all(e.is_zero for e in x):
        raise ZeroVectorError("membership is defined for non-zero vectors only")
    for v in vs:
        if len(v) != len(x):
            raise LengthMismatchError(f"vector lengths differ: {len(v)} vs {len(x)}")
        if not contains_zero([a * b for a, b in zip(v, x)]):
            return False
    return True


def perp_enumerate(vs: Sequence[PhasedVector], k: int) -> list:
    """All non-zero vectors with entries in the k-point discretization that
    are orthogonal to every vector of vs, in lexicographic order (zero
    before units, units by angle).

    k must be even so that the discretization is closed under negation.
    """
    if not vs:
        raise ZeroVectorError("need at least one constraint vector")
    if k % 2 != 0:
        raise OddDiscretizationError(f"k must be even, got {k}")
    n = len(vs[0])
    for v in vs:
        if len(v) != n:
            raise LengthMismatchError("constraint vectors must share one length")
        for e in v:
            if not in_tphi_k(e, k):
                raise ValueError(
                    f"constraint entry {format_value(e)} is not a {k}-th root of unity"
                )
    pool = scalars(k)
    out = []
    for cand in itertools.product(pool, repeat=n):
        if all(e.is_zero for e in cand):
            continue
        if perp_membership(vs, cand):
            out.append(cand)
    return out


@dataclass(frozen=True)
class GPFunction:
    """A function on r-tuples from the ground set 1..n, alternating by
    construction: only values on strictly increasing tuples are stored
    (zero values are dropped), and evaluation extends by permutation sign.
    """

    n: int
    r: int
    entries: tuple = ()

    def __post_init__(self):
        if self.n < 1:
            raise BadArityError("ground set must be non-empty")
        if not 1 <= self.r <= self.n:
            raise BadArityError(f"arity r={self.r} outside 1..{self.n}")
        seen = {}
        for key, val in self.entries:
            key = tuple(int(i) for i in key)
            if len(key) != self.r:
                raise BadArityError(f"key {key} is not an {self.r}-tuple")
            for i in key:
                if not 1 <= i <= self.n:
                    raise IndexOutOfRangeError(f"index {i} outside 1..{self.n}")
            if any(a >= b for a, b in zip(key, key[1:])):
                raise BadArityError(f"key {key} must be strictly increasing")
            if key in seen:
                raise ValueError(f"duplicate key {key}")
            seen[key] = val
        kept = tuple(sorted((k, v) for k, v in seen.items() if not v.is_zero))
        object.__setattr__(self, "entries", kept)
        object.__setattr__(self, "_map", dict(kept))

    @classmethod
    def from_values(cls, n: int, r: int, mapping: Mapping) -> "GPFunction":
        return cls(n, r, tuple(mapping.items()))

    @property
    def values(self) -> dict:
        return dict(self.entries)

    @property
    def is_zero(self) -> bool:
        return not self.entries


def gp_eval(phi: GPFunction, tup: Sequence[int]) -> TPhi:
    """Evaluate on an arbitrary r-tuple: zero on repeats, otherwise the
    stored value times the sign of the sorting permutation (a half-turn
    when odd)."""
    tup = tuple(tup)
    if len(tup) != phi.r:
        raise BadArityError(f"expected an {phi.r}-tuple, got {tup}")
    for i in tup:
        if not 1 <= i <= phi.n:
            raise IndexOutOfRangeError(f"index {i} outside 1..{phi.n}")
    if len(set(tup)) < len(tup):
        return ZERO
    val = phi._map.get(tuple(sorted(tup)), ZERO)
    if _inversions(tup) % 2:
        return HALF_TURN * val
    return val


def _inversions(tup) -> int:
    return sum(
        1
        for i in range(len(tup))
        for j in range(i + 1, len(tup))
        if tup[i] > tup[j]
    )


def gp_relation_terms(phi: GPFunction, xs: Sequence[int], ys: Sequence[int]) -> list:
    """The r+1 terms of one exchange relation, signs applied."""
    xs = tuple(xs)
    ys = tuple(ys)
    terms = []
    for k in range(1, len(xs) + 1):
        dropped = xs[: k - 1] + xs[k:]
        factor = gp_eval(phi, dropped) * gp_eval(phi, (xs[k - 1],) + ys)
        if k % 2:
            factor = HALF_TURN * factor
        terms.append(factor)
    return terms


def gp_relation_check(phi: GPFunction, xs: Sequence[int], ys: Sequence[int]) -> bool:
    """Whether zero lies in the multivalued sum of the exchange terms for
    the given sorted index tuples (xs of size r+1, ys of size r-1)."""
    xs = tuple(xs)
    ys = tuple(ys)
    if len(xs) != phi.r + 1:
        raise BadArityError(f"xs must have size {phi.r + 1}")
    if len(ys) != phi.r - 1:
        raise BadArityError(f"ys must have size {phi.r - 1}")
    for t in (xs, ys):
        if any(a >= b for a, b in zip(t, t[1:])):
            raise BadArityError(f"{t} must be strictly increasing")
    return contains_zero(gp_relation_terms(phi, xs, ys))


@dataclass(frozen=True)
class GPReport:
    ok: bool
    reason: str | None = None
    xs: tuple = ()
    ys: tuple = ()


def gp_verify_all(phi: GPFunction, all_tuples: bool = False) -> GPReport:
    """Check every exchange relation; report the first failure.

    The default sweep runs over strictly increasing index tuples.  With
    all_tuples the sweep runs over arbitrary tuples (repeats included);
    relations with repeated or permuted indices are forced by the
    alternating rule, so the verdict must coincide.
    """
    if phi.is_zero:
        return GPReport(False, "not identically zero")
    ground = range(1, phi.n + 1)
    if all_tuples:
        xs_sweep = itertools.product(ground, repeat=phi.r + 1)
    else:
        xs_sweep = itertools.combinations(ground, phi.r + 1)
    for xs in xs_sweep:
        if all_tuples:
            ys_sweep = itertools.product(ground, repeat=phi.r - 1)
        else:
            ys_sweep = itertools.combinations(ground, phi.r - 1)
        for ys in ys_sweep:
            if not contains_zero(gp_relation_terms(phi, xs, ys)):
                return GPReport(False, "exchange relation failed", tuple(xs), tuple(ys))
    return GPReport(True)


def scalar_multiply(t: TPhi, phi: GPFunction) -> GPFunction:
    """The function t * phi (zero scalar gives the zero function)."""
    return GPFunction(phi.n, phi.r, tuple((k, t * v) for k, v in phi.entries))


def gp_normalize(phi: GPFunction) -> GPFunction:
    """Divide by the value at the least stored tuple, making it one.

    Scalar-equivalent functions normalize to the same representative.
    """
    if phi.is_zero:
        raise IdenticallyZeroError("the zero function cannot be normalized")
    lead = phi.entries[0][1]
    return scalar_multiply(lead.inverse(), phi)


@dataclass(frozen=True)
class Transversal:
    """Greedy transversal of the transposition pairing on distinct-entry
    r-tuples: no member repeats an entry, every distinct-entry tuple is a
    member or one transposition away from one, and no two members are a
    single transposition apart."""

    n: int
    r: int
    tuples: tuple

    @property
    def d(self) -> int:
        return len(self.tuples)


def transpositions(tup: Sequence[int]) -> list:
    """All tuples obtained by swapping two positions."""
    tup = tuple(tup)
    out = []
    for i in range(len(tup)):
        for j in range(i + 1, len(tup)):
            lst = list(tup)
            lst[i], lst[j] = lst[j], lst[i]
            out.append(tuple(lst))
    return out


def transversal(n: int, r: int) -> Transversal:
    """Greedy construction in lexicographic order: keep the least remaining
    tuple, discard everything one transposition away from it, repeat."""
    if not 1 <= r <= n:
        raise BadArityError(f"need 1 <= r <= n, got r={r}, n={n}")
    alive = set(itertools.permutations(range(1, n + 1), r))
    chosen = []
    for tup in sorted(alive):
        if tup not in alive:
            continue
        chosen.append(tup)
        alive.discard(tup)
        for other in transpositions(tup):
            alive.discard(other)
    return Transversal(n, r, tuple(chosen))


def format_gp(phi: GPFunction) -> str:
    """File form: 'n r' header, then one 'i1 i2 .. ir : value' line per
    stored tuple."""
    lines = [f"{phi.n} {phi.r}"]
    for key, val in phi.entries:
        lines.append(f"{' '.join(str(i) for i in key)} : {format_value(val)}")
    return "\n".join(lines) + "\n"


def parse_gp_file(text: str) -> GPFunction:
    """Parse the file form; tuples not listed get the value zero."""
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise ValueError("empty function file")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad header {lines[0]!r}: expected 'n r'")
    n, r = int(header[0]), int(header[1])
    values = {}
    for ln in lines[1:]:
        if ":" not in ln:
            raise ValueError(f"bad line {ln!r}: expected 'i1 .. ir : value'")
        left, right = ln.rsplit(":", 1)
        key = tuple(int(tok) for tok in left.split())
        if key in values:
            raise ValueError(f"duplicate tuple {key}")
        values[key] = parse_value(right)
    return GPFunction.from_values(n, r, values)
