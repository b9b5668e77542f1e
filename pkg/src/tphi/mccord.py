"""Contractibility certificates for the basic opens of a finite poset.

A finite poset carries the up-topology, whose minimal basis is the family
of upsets of single elements.  The comparison map from the order complex
sends each point to the top of its supporting chain, and its fiber over
the basic open at x deformation-retracts to the full subcomplex on the
upset of x.  Everything that makes such a map a weak equivalence is
checkable here: each basic fiber complex is a cone with apex x.

Certificates come in decreasing strength.  A cone or a collapse sequence
proves contractibility outright; trivial reduced homology (which includes
the abelianized edge-path group through dimension one) is only evidence,
and is labeled as such.  Collapse failure never certifies anything.
"""

from __future__ import annotations

from dataclasses import dataclass

from .homology import HomologySummary, homology_groups
from .poset import FinitePoset, chain_count, discrete_type_classes
from .simplicial import (
    DEFAULT_SIMPLEX_CAP,
    SimplicialComplex,
    collapse_certify,
    cone_apexes,
    order_complex,
)

CONE = "cone-apex"
COLLAPSE = "collapse-sequence"
HOMOLOGY_ONLY = "homology-only"
OBSTRUCTION = "obstruction"


@dataclass(frozen=True)
class Certificate:
    """Outcome of the contractibility ladder for one complex."""

    kind: str
    apex: str | None = None
    steps: tuple = ()
    homology: HomologySummary | None = None

    @property
    def proves_contractible(self) -> bool:
        return self.kind in (CONE, COLLAPSE)


def contractibility_certificate(c: SimplicialComplex) -> Certificate:
    """Strongest available certificate: cone, else collapse sequence,
    else trivial reduced homology, else the non-trivial homology itself.

    Only the first two prove contractibility.  An obstruction disproves
    it; homology-only settles nothing either way.
    """
    if len(c) == 0:
        raise ValueError("empty complex has no contractibility certificate")
    apexes = cone_apexes(c)
    if apexes:
        return Certificate(CONE, apex=apexes[0])
    res = collapse_certify(c)
    if res.collapsible:
        return Certificate(COLLAPSE, steps=res.steps)
    h = homology_groups(c, reduced=True)
    if h.groups == ():
        return Certificate(HOMOLOGY_ONLY, homology=h)
    return Certificate(OBSTRUCTION, homology=h)


def comparison_fiber_complex(
    p: FinitePoset, x: str, cap: int = DEFAULT_SIMPLEX_CAP
) -> SimplicialComplex:
    """Order complex of the upset of x: the retract of the comparison
    map's fiber over the basic open at x."""
    return order_complex(p.induced(p.upset([x])), cap)


@dataclass(frozen=True)
class BasisCertificate:
    """Contractibility certificate for one basic open, with the size of
    its fiber complex (simplex count)."""

    element: str
    kind: str
    apex: str | None
    size: int


@dataclass(frozen=True)
class McCordReport:
    """Per-element basis certificates plus the homology of the whole
    order complex (None when skipped)."""

    certificates: tuple
    all_cone: bool
    homology: HomologySummary | None

    @property
    def verdict(self) -> str:
        if all(c.kind in (CONE, COLLAPSE) for c in self.certificates):
            return "all basic opens certified contractible"
        return "contractibility not certified for every basic open"


def basis_certificates(
    p: FinitePoset,
    cap: int = DEFAULT_SIMPLEX_CAP,
    include_homology: bool = True,
) -> McCordReport:
    """Certify every basic open of the finite space, one certificate per
    element in label order.

    x is the minimum of its own upset, so the fiber complex is a cone
    with apex x; that is decided at the poset level and the complex is
    never built (its size comes from the chain-counting recurrence).  The
    ladder fallback is kept for form's sake.
    """
    certs = []
    for x in p.labels:
        up = p.upset([x])
        if all(y == x or p.less(x, y) for y in up):
            size = chain_count(p.induced(up))
            certs.append(BasisCertificate(x, CONE, x, size))
        else:
            cx = comparison_fiber_complex(p, x, cap)
            cert = contractibility_certificate(cx)
            certs.append(BasisCertificate(x, cert.kind, cert.apex, len(cx)))
    hom = finite_space_homology(p, cap) if include_homology else None
    all_cone = all(c.kind == CONE for c in certs)
    return McCordReport(tuple(certs), all_cone, hom)


def finite_space_homology(
    p: FinitePoset, cap: int = DEFAULT_SIMPLEX_CAP, reduced: bool = False
) -> HomologySummary:
    """Weak homotopy invariants of the finite space, read off its order
    complex."""
    return homology_groups(order_complex(p, cap), reduced)


@dataclass(frozen=True)
class ComponentReport:
    """One comparability component: its elements, the certificate for its
    order complex, and the resulting status."""

    elements: tuple
    status: str  # "contractible" | "obstructed" | "inconclusive"
    certificate: Certificate


@dataclass(frozen=True)
class CWTypeReport:
    components: tuple
    verdict: str  # "CW type" | "obstructed" | "inconclusive"


def cw_type_report(p: FinitePoset, cap: int = DEFAULT_SIMPLEX_CAP) -> CWTypeReport:
    """Does the finite space have the homotopy type of a CW complex?

    The component set of a finite space is automatically discrete, so the
    question reduces to contractibility of each comparability component's
    order complex.  Cone or collapse certificates settle a component;
    non-trivial reduced homology obstructs it; anything else is left
    inconclusive rather than decided.
    """
    comps = []
    for cls in discrete_type_classes(p):
        sub = p.induced(cls)
        cert = contractibility_certificate(order_complex(sub, cap))
        if cert.proves_contractible:
            status = "contractible"
        elif cert.kind == OBSTRUCTION:
            status = "obstructed"
        else:
            status = "inconclusive"
        comps.append(ComponentReport(tuple(sorted(cls)), status, cert))
    if any(c.status == "obstructed" for c in comps):
        verdict = "obstructed"
    elif any(c.status == "inconclusive" for c in comps):
        verdict = "inconclusive"
    else:
        verdict = "CW type"
    return CWTypeReport(tuple(comps), verdict)
