"""A circle and a sphere carved out of sign vectors.

The vectors orthogonal to (1,1,1) over the two-point phase set {1,-1}
form a poset whose order complex is a 12-gon circle; one more coordinate
turns it into a 2-sphere.  Homology confirms both.
"""

from tphi.homology import format_homology, homology_groups
from tphi.hyperfield import ONE
from tphi.models import build_perp_poset
from tphi.simplicial import order_complex

for n in (3, 4):
    mp = build_perp_poset([(ONE,) * n], 2)
    c = order_complex(mp.poset)
    print(f"perp of the all-ones vector, n={n}")
    print(f"  poset elements: {len(mp.poset.labels)}")
    print(f"  complex f-vector: {c.f_vector()}")
    for line in format_homology(homology_groups(c, reduced=True)):
        print(f"  {line}")
    print()

# same machinery, degenerate input: with n=2 the perp is a bare antichain
# of k points, not a circle.  See the caveat the CLI prints for this case.
mp = build_perp_poset([(ONE, ONE)], 6)
c = order_complex(mp.poset)
print("n=2 control: f-vector", c.f_vector(), "- just points, no cycle")
