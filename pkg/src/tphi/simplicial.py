"""Finite simplicial complexes, with order complexes of posets as the main
source.

A complex stores its vertex labels (sorted) and every face as a sorted
tuple of vertex indices.  The order complex of a poset has one vertex per
element and one face per non-empty chain; building it is guarded by a
simplex-count cap because chain counts explode much faster than poset
sizes.  Joins, Euler characteristics, cone detection, greedy free-face
collapsing, face posets, and barycentric subdivision live here too.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import SizeCapExceededError, UnknownElementError
from .poset import FinitePoset, chain_count

DEFAULT_SIMPLEX_CAP = 5_000_000


class SimplicialComplex:
    """Immutable abstract simplicial complex on string-labeled vertices."""

    __slots__ = ("labels", "_pos", "faces", "_by_dim")

    def __init__(self, labels: Iterable[str], faces: Iterable[tuple], closed: bool = False):
        self.labels = tuple(sorted(labels))
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate vertex labels")
        self._pos = {lab: i for i, lab in enumerate(self.labels)}
        if closed:
            face_set = set(faces)
        else:
            face_set = set()
            stack = [tuple(sorted(f)) for f in faces]
            for f in stack:
                if not f:
                    raise ValueError("faces must be non-empty")
            while stack:
                f = stack.pop()
                if f in face_set:
                    continue
                face_set.add(f)
                if len(f) > 1:
                    for i in range(len(f)):
                        stack.append(f[: i] + f[i + 1 :])
        for f in face_set:
            for i in f:
                if not 0 <= i < len(self.labels):
                    raise ValueError(f"face {f} uses an unknown vertex index")
        self.faces = frozenset(face_set)
        self._by_dim = None

    @classmethod
    def from_simplices(cls, simplices: Iterable[Iterable[str]]) -> "SimplicialComplex":
        """Build from label-level generators, closing downward."""
        gens = [tuple(sorted(set(s))) for s in simplices]
        labels = sorted({lab for g in gens for lab in g})
        pos = {lab: i for i, lab in enumerate(labels)}
        faces = [tuple(sorted(pos[lab] for lab in g)) for g in gens]
        return cls(labels, faces)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.labels == other.labels and self.faces == other.faces

    def __hash__(self):
        return hash((self.labels, self.faces))

    def __len__(self) -> int:
        return len(self.faces)

    def __repr__(self) -> str:
        return f"SimplicialComplex({len(self.labels)} vertices, {len(self.faces)} faces, dim {self.dim})"

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.faces), default=0) - 1

    def _dim_table(self):
        if self._by_dim is None:
            table = {}
            for f in self.faces:
                table.setdefault(len(f) - 1, []).append(f)
            for lst in table.values():
                lst.sort()
            self._by_dim = table
        return self._by_dim

    def faces_of_dim(self, d: int) -> list:
        return self._dim_table().get(d, [])

    def f_vector(self) -> tuple:
        return tuple(len(self.faces_of_dim(d)) for d in range(self.dim + 1))

    def face_labels(self, face: tuple) -> tuple:
        return tuple(self.labels[i] for i in face)

    def has_face(self, simplex: Iterable[str]) -> bool:
        try:
            key = tuple(sorted(self._pos[lab] for lab in simplex))
        except KeyError:
            return False
        return key in self.faces

    def maximal_faces(self) -> list:
        """Faces with no proper coface, sorted."""
        out = []
        for f in self.faces:
            if not any(
                tuple(sorted(f + (v,))) in self.faces
                for v in range(len(self.labels))
                if v not in f
            ):
                out.append(f)
        return sorted(out)


def order_complex(p: FinitePoset, cap: int = DEFAULT_SIMPLEX_CAP) -> SimplicialComplex:
    """The complex of non-empty chains of p.

    Chain counts are computed first; anything beyond the cap raises
    SizeCapExceededError instead of building.
    """
    total = chain_count(p)
    if total > cap:
        raise SizeCapExceededError(
            f"order complex would hold {total} chains, cap is {cap}"
        )
    succ = [sorted(s) for s in p.above]
    faces = []
    chain = []

    def grow(i: int):
        chain.append(i)
        faces.append(tuple(sorted(chain)))
        for j in succ[i]:
            grow(j)
        chain.pop()

    for i in range(len(p.labels)):
        grow(i)
    return SimplicialComplex(p.labels, faces, closed=True)


def euler_characteristic(c: SimplicialComplex) -> int:
    return sum((-1) ** d * len(c.faces_of_dim(d)) for d in range(c.dim + 1))


def join(a: SimplicialComplex, b: SimplicialComplex, cap: int = DEFAULT_SIMPLEX_CAP) -> SimplicialComplex:
    """Simplicial join: unions of a face from each side (and the originals).

    Vertex labels are prefixed only when the two sides collide.  Face
    counts multiply, so the same cap as for order complexes applies.
    """
    total = (len(a.faces) + 1) * (len(b.faces) + 1) - 1
    if total > cap:
        raise SizeCapExceededError(f"join would hold {total} faces, cap is {cap}")
    clash = set(a.labels) & set(b.labels)
    la = [f"A:{lab}" for lab in a.labels] if clash else list(a.labels)
    lb = [f"B:{lab}" for lab in b.labels] if clash else list(b.labels)
    labels = la + lb
    order = sorted(range(len(labels)), key=lambda i: labels[i])
    rank = [0] * len(labels)
    for new, old in enumerate(order):
        rank[old] = new
    amap = [rank[i] for i in range(len(la))]
    bmap = [rank[len(la) + i] for i in range(len(lb))]
    faces = set()
    afaces = [tuple(sorted(amap[i] for i in f)) for f in a.faces]
    bfaces = [tuple(sorted(bmap[i] for i in f)) for f in b.faces]
    faces.update(afaces)
    faces.update(bfaces)
    for fa in afaces:
        for fb in bfaces:
            faces.add(tuple(sorted(fa + fb)))
    return SimplicialComplex(sorted(labels), faces, closed=True)


def cone_apexes(c: SimplicialComplex) -> list:
    """Vertices contained in every maximal face, sorted by label."""
    if not c.faces:
        return []
    common = None
    for f in c.maximal_faces():
        common = set(f) if common is None else common & set(f)
        if not common:
            return []
    return sorted(c.labels[i] for i in common)


@dataclass(frozen=True)
class CollapseResult:
    """Contractibility certificate: a cone apex or an elementary collapse
    sequence ending in one vertex.  collapsible=False only means the greedy
    search got stuck, never that the complex is essential."""

    collapsible: bool
    method: str | None = None
    apex: str | None = None
    steps: tuple = ()


def collapse_certify(c: SimplicialComplex) -> CollapseResult:
    """Detect a cone, else greedily remove free face pairs.

    A face is free when it has exactly one immediate coface; removing the
    pair preserves the homotopy type.  The greedy order (smallest face
    first) is deterministic.
    """
    if not c.faces:
        return CollapseResult(False)
    apexes = cone_apexes(c)
    if apexes:
        return CollapseResult(True, "cone", apexes[0])
    faces = set(c.faces)
    cofaces = {f: set() for f in faces}
    for f in faces:
        if len(f) > 1:
            for i in range(len(f)):
                cofaces[f[: i] + f[i + 1 :]].add(f)
    heap = [(len(f), f) for f, cs in cofaces.items() if len(cs) == 1]
    heapq.heapify(heap)
    steps = []
    while heap:
        _, f = heapq.heappop(heap)
        if f not in faces or len(cofaces[f]) != 1:
            continue
        (g,) = cofaces[f]
        faces.discard(f)
        faces.discard(g)
        steps.append((c.face_labels(f), c.face_labels(g)))
        for parent, child in ((g, f), (f, None)):
            if len(parent) > 1:
                for i in range(len(parent)):
                    facet = parent[: i] + parent[i + 1 :]
                    if facet in faces:
                        cofaces[facet].discard(parent)
                        if len(cofaces[facet]) == 1:
                            heapq.heappush(heap, (len(facet), facet))
    if len(faces) == 1 and len(next(iter(faces))) == 1:
        return CollapseResult(True, "collapse", None, tuple(steps))
    return CollapseResult(False, None, None, tuple(steps))


def face_poset(c: SimplicialComplex) -> FinitePoset:
    """Non-empty faces ordered by strict inclusion.

    Face labels join vertex labels with '|'.
    """
    def name(f):
        return "|".join(c.face_labels(f))

    elements = [name(f) for f in c.faces]
    pairs = []
    for f in c.faces:
        if len(f) > 1:
            nf = name(f)
            for size in range(1, len(f)):
                for sub in itertools.combinations(f, size):
                    pairs.append((name(sub), nf))
    return FinitePoset(elements, pairs)


def barycentric_subdivision(c: SimplicialComplex, cap: int = DEFAULT_SIMPLEX_CAP) -> SimplicialComplex:
    """Order complex of the face poset: one vertex per face, one face per
    chain of faces."""
    return order_complex(face_poset(c), cap)


def complex_to_lines(c: SimplicialComplex) -> list:
    """Canonical export: every face on one line as sorted labels, lines
    sorted; diff-friendly."""
    for lab in c.labels:
        if any(ch.isspace() for ch in lab):
            raise ValueError(f"label {lab!r} contains whitespace")
    return sorted(" ".join(c.face_labels(f)) for f in c.faces)


def parse_complex_lines(text) -> SimplicialComplex:
    """Parse the export form; lines are face generators, closure is taken."""
    if isinstance(text, str):
        lines = text.splitlines()
    else:
        lines = list(text)
    gens = []
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        gens.append(line.split())
    return SimplicialComplex.from_simplices(gens)
