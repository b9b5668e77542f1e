"""Finite model families: powers of the discretized phase hyperfield,
perp subposets, and exhaustive enumeration of strong alternating functions.

The power poset on nonzero vectors uses the coordinatewise order where
zero sits below every unit and distinct units are incomparable, so x < y
exactly when x arises from y by zeroing some coordinates.  Its order
complex is the barycentric subdivision of a join of antichains, which
pins the expected homology used as a test oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BadArityError, EmptyPerpError, SizeCapExceededError
from .homology import HomologySummary
from .hyperfield import ONE, ZERO, in_tphi_k, phase_key, scalars
from .phased import (
    GPFunction,
    format_vector,
    gp_verify_all,
    perp_enumerate,
    support,
)
from .poset import FinitePoset, MirroredPoset, build_poset, mirrored
from .simplicial import DEFAULT_SIMPLEX_CAP

DISCRETIZATION_CAVEAT = (
    "caveat: a perp poset over k-th roots of unity is a finite snapshot; "
    "its order complex need not have the homotopy type of the continuum "
    "perp set (one constraint in two variables gives k points, not a circle)"
)


@dataclass(frozen=True)
class TPhiModelSpec:
    """Which finite model to build: a full power, a perp subposet, or the
    rank-r strong alternating functions."""

    n: int
    k: int
    family: str
    vectors: tuple = ()
    r: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.k < 1:
            raise ValueError("k must be positive")
        if self.family not in ("power", "perp", "grassmannian"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "perp":
            if not self.vectors:
                raise ValueError("perp family needs constraint vectors")
            if self.k % 2:
                raise ValueError("perp family needs even k")
            for v in self.vectors:
                if len(v) != self.n:
                    raise ValueError("constraint length differs from n")
                if not all(in_tphi_k(e, self.k) for e in v):
                    raise ValueError("constraint entries must lie in the k-point set")
        if self.family == "grassmannian" and not 1 <= self.r <= self.n:
            raise ValueError("grassmannian family needs 1 <= r <= n")


def _chain_poset(labels) -> FinitePoset:
    labels = list(labels)
    return build_poset(labels, list(zip(labels, labels[1:])))


def _dominates(y, x) -> bool:
    return all(a.is_zero or a == b for a, b in zip(x, y))


def build_tphi_power(n: int, k: int, cap: int = DEFAULT_SIMPLEX_CAP) -> MirroredPoset:
    """All nonzero length-n vectors over the k-point discretization,
    ordered by zeroing coordinates, mirrored onto 1..n by support size."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    size = (k + 1) ** n - 1
    if size > cap:
        raise SizeCapExceededError(f"power poset has {size} elements, cap is {cap}")
    pool = scalars(k)
    vectors = [
        v for v in itertools.product(pool, repeat=n) if not all(e.is_zero for e in v)
    ]
    labels = [format_vector(v) for v in vectors]
    pairs = []
    for v, lab in zip(vectors, labels):
        if len(support(v)) < 2:
            continue
        for i in support(v):
            below = v[:i] + (ZERO,) + v[i + 1 :]
            pairs.append((format_vector(below), lab))
    poset = build_poset(labels, pairs)
    index = _chain_poset(str(s) for s in range(1, n + 1))
    assignment = {lab: str(len(support(v))) for v, lab in zip(vectors, labels)}
    return mirrored(poset, index, assignment)


def build_perp_poset(vs, k: int, cap: int = DEFAULT_SIMPLEX_CAP) -> MirroredPoset:
    """The subposet of the power model orthogonal to every constraint.

    The support-size mirror is kept, with empty strata dropped from the
    index chain (pruned_strata reports which).
    """
    members = perp_enumerate(vs, k)
    if not members:
        raise EmptyPerpError("no nonzero vector is orthogonal to the constraints")
    if len(members) > cap:
        raise SizeCapExceededError(f"perp has {len(members)} elements, cap is {cap}")
    labels = [format_vector(m) for m in members]
    pairs = []
    for x, lx in zip(members, labels):
        for y, ly in zip(members, labels):
            if x is not y and _dominates(y, x) and lx != ly:
                pairs.append((lx, ly))
    poset = build_poset(labels, pairs)
    occupied = sorted({len(support(m)) for m in members})
    index = _chain_poset(str(s) for s in occupied)
    assignment = {lab: str(len(support(m))) for m, lab in zip(members, labels)}
    return mirrored(poset, index, assignment)


def perp_pruned_strata(vs, k: int) -> tuple:
    """Support sizes 1..n whose perp stratum is empty (the strata removed
    from the index chain by build_perp_poset)."""
    members = perp_enumerate(vs, k)
    occupied = {len(support(m)) for m in members}
    return tuple(s for s in range(1, len(vs[0]) + 1) if s not in occupied)


def _gp_sort_key(tuples):
    def key(phi):
        values = dict(phi.entries)
        return tuple(phase_key(values.get(t, ZERO)) for t in tuples)

    return key


def enum_grassmannian(
    n: int, r: int, k: int, cap: int = DEFAULT_SIMPLEX_CAP
) -> list:
    """Every strong alternating function of rank r on 1..n with values in
    the k-point discretization, one normalized representative per scalar
    class, sorted by value vector.

    Normalization is built into the search: the first nonzero value (in
    tuple order) is pinned to 1, so each scalar orbit appears once.
    """
    if not 1 <= r <= n:
        raise BadArityError(f"rank {r} not in 1..{n}")
    tuples = list(itertools.combinations(range(1, n + 1), r))
    count = len(tuples)
    if (k + 1) ** count > cap:
        raise SizeCapExceededError(
            f"{(k + 1) ** count} candidates exceed cap {cap}"
        )
    pool = scalars(k)
    found = []
    for first in range(count):
        for tail in itertools.product(pool, repeat=count - first - 1):
            mapping = {tuples[first]: ONE}
            for t, v in zip(tuples[first + 1 :], tail):
                if not v.is_zero:
                    mapping[t] = v
            phi = GPFunction.from_values(n, r, mapping)
            if gp_verify_all(phi).ok:
                found.append(phi)
    found.sort(key=_gp_sort_key(tuples))
    return found


def expected_join_betti(n: int, k: int) -> HomologySummary:
    """Reduced homology forced by the join structure of the power model:
    rank (k-1)^n concentrated in dimension n-1."""
    rank = (k - 1) ** n
    groups = ((n - 1, (rank, ())),) if rank else ()
    return HomologySummary(groups, n - 1, reduced=True)


def build_model(spec: TPhiModelSpec, cap: int = DEFAULT_SIMPLEX_CAP):
    """Dispatch a TPhiModelSpec to its builder."""
    if spec.family == "power":
        return build_tphi_power(spec.n, spec.k, cap)
    if spec.family == "perp":
        return build_perp_poset(list(spec.vectors), spec.k, cap)
    return enum_grassmannian(spec.n, spec.r, spec.k, cap)
