"""Heaps of polymers, lattice animals, and their generating functions."""

from .heap_core import (
    EMPTY_HEAP,
    Heap,
    NordicQuadruple,
    Piece,
    Polymer,
    canonical_translate,
    concurrent,
    connected_components,
    heap_from_sequence,
    is_connected,
    is_half_pyramid,
    is_pyramid,
    left_half_width,
    maximal_pieces,
    minimal_pieces,
    product,
    push,
)
from .lattice_animals import (
    Animal,
    Segment,
    Site,
    bottom_profile,
    count_animals,
    directed_lw_counts,
    enumerate_animals,
    is_directed,
    is_multi_directed,
    keystones,
    left_half_width_animal,
    reachable_from,
    segments,
    sources,
)
from .bijections import (
    animal_from_connected_heap,
    animal_from_pyramid,
    count_anchored_heaps,
    count_strip_heaps,
    enumerate_anchored_heaps,
    enumerate_heaps,
    nordic_compose,
    nordic_decompose,
    project,
)
from .gf_engine import (
    TruncatedSeries,
    check_lemma_HD,
    series_B,
    series_by_name,
    series_D1,
    series_Dj,
    series_lw_total,
    series_M,
    series_Q,
    series_R,
    series_S,
)
from .asymptotics import (
    AsymptoticConstants,
    check_directed_asymptotics,
    check_multi_growth,
    eval_B,
    eval_Q,
    eval_R,
    eval_S,
    find_constants,
)

__version__ = "0.1.0"
