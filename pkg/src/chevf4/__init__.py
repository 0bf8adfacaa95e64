"""Exact-arithmetic adjoint Chevalley group of type F4 over local rings.

The package builds the 52-dimensional adjoint representation from its root
system, derives the Lie algebra structure constants, exposes the group
elements (root subgroups, Weyl representatives, torus elements) over any
supported local ring with invertible 2, and mechanically verifies the
classical matrix identities used in the rigidity analysis of the
automorphism group.

Submodules
----------
rings           local ring arithmetic (Z/p^k, F_p, F_p[eps]/eps^k)
roots           the F4 root system and the 52-element basis indexing
algebra         structure constants, generator matrices, Lie checks
group           group elements and exact matrix arithmetic over a ring
reference_tables printed reference data used as goldens
decomposition   unipotent-times-torus coordinates and their recovery
matrix_units    generation of all 2704 elementary matrix units
rigidity        linearized normalizer system and its kernel
automorphisms   ring and inner automorphisms acting on group elements
harness         the end-to-end verification run
cli             command line interface
"""

from .rings import LocalRing, NonUnit, NotInvertible, RingElem, parse_ring_descriptor

__all__ = [
    "LocalRing",
    "NonUnit",
    "NotInvertible",
    "RingElem",
    "parse_ring_descriptor",
]

__version__ = "0.1.0"
