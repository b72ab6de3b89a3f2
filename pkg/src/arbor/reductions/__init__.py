"""Executable reduction constructions: fixed-point embeddings of trees into
regular ambients, the edge-inversion-to-rooted transfer, the Cayley-ball
widget coding and its decoder, the decorated integer-line tree, and the
nested multiset invariant for bounded-height trees."""

from arbor.reductions.embed import (
    EmbeddedPair,
    invert_to_rooted,
    phi_rooted,
    phi_unrooted,
    sigma_aut,
)
from arbor.reductions.height import height_invariant
from arbor.reductions.widgets import (
    DecodedCoding,
    GroupWordWindow,
    NotACoding,
    WidgetCoding,
    ball_words,
    parse_f2set,
    serialize_f2set,
    widget_decode,
    widget_encode,
)
from arbor.reductions.zline import (
    IntegerWindow,
    ZWindow,
    parse_zset,
    serialize_zset,
    tz_build,
    tz_decode,
    tz_phi,
)

__all__ = [
    "EmbeddedPair",
    "sigma_aut",
    "phi_rooted",
    "phi_unrooted",
    "invert_to_rooted",
    "GroupWordWindow",
    "WidgetCoding",
    "DecodedCoding",
    "NotACoding",
    "ball_words",
    "widget_encode",
    "widget_decode",
    "parse_f2set",
    "serialize_f2set",
    "IntegerWindow",
    "ZWindow",
    "tz_build",
    "tz_phi",
    "tz_decode",
    "parse_zset",
    "serialize_zset",
    "height_invariant",
]
