"""Conjugacy invariants for finite tree automorphisms, type classification
(inversion / translation / elliptic) of ball-presented automorphisms of
regular trees, and the coding constructions tying sets, group words, and
integer lines to automorphisms with prescribed fixed-point structure.

Hot kernels run on a compiled extension when available; set ARBOR_PURE=1 to
force the pure-Python fallback.
"""

from arbor._kernels import backend_name
from arbor.autom import (
    TreeAutomorphism,
    compose,
    conj_oracle,
    cycle_type,
    enumerate_aut,
    inverse,
    orbits,
    validate_aut,
)
from arbor.canon import code_rooted, code_unrooted, iso_witness
from arbor.orbit_tree import LabeledOrbitTree, conj_decide, lift_witness, orbit_tree
from arbor.trees import (
    OMEGA,
    CenterEdge,
    CenterVertex,
    FormatError,
    RegularTruncation,
    RootedTree,
    UnrootedTree,
    center,
    parse_tree,
    serialize_tree,
    subdivide_edge,
    truncate_regular,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "backend_name",
    "OMEGA",
    "RootedTree",
    "UnrootedTree",
    "RegularTruncation",
    "CenterVertex",
    "CenterEdge",
    "FormatError",
    "parse_tree",
    "serialize_tree",
    "center",
    "subdivide_edge",
    "truncate_regular",
    "TreeAutomorphism",
    "validate_aut",
    "compose",
    "inverse",
    "orbits",
    "cycle_type",
    "enumerate_aut",
    "conj_oracle",
    "code_rooted",
    "code_unrooted",
    "iso_witness",
    "LabeledOrbitTree",
    "orbit_tree",
    "conj_decide",
    "lift_witness",
]
