"""Heaps of polymers: integer intervals stacked by a falling rule.

A polymer is a closed interval [i, j] on the integer line with j > i.
Two polymers are *concurrent* when their intervals share at least one
point, a single touching point included.  A heap is what remains of a
sequence of polymers once adjacent non-concurrent ones are allowed to
commute; dropping the polymers one by one (each lands on the highest
earlier polymer concurrent to it, or on the ground) produces a canonical
fully-fallen configuration, which is the stored normal form.  Two
sequences are equivalent exactly when their fallen configurations agree,
so heap equality is plain value equality on ``(polymer, level)`` pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple


@dataclass(frozen=True, order=True)
class Polymer:
    """Closed integer interval [left, right] with right > left."""

    left: int
    right: int

    def __post_init__(self) -> None:
        if self.right <= self.left:
            raise ValueError(f"polymer needs right > left, got [{self.left}, {self.right}]")

    @property
    def length(self) -> int:
        return self.right - self.left

    def shifted(self, dx: int) -> "Polymer":
        return Polymer(self.left + dx, self.right + dx)

    def __repr__(self) -> str:
        return f"[{self.left},{self.right}]"


def concurrent(p: Polymer, q: Polymer) -> bool:
    """True when the two intervals intersect, touching in a point included."""
    return max(p.left, q.left) <= min(p.right, q.right)


class Piece(NamedTuple):
    """A polymer of a heap together with the level it rests at."""

    polymer: Polymer
    level: int


def _piece_key(piece: Piece) -> tuple[int, int, int]:
    return (piece.level, piece.polymer.left, piece.polymer.right)


@dataclass(frozen=True)
class Heap:
    """Fully fallen configuration, pieces sorted by (level, left, right).

    The invariants checked on construction characterise the normal form:
    no two concurrent pieces share a level, and every piece at level
    l >= 1 rests on (is concurrent to) some piece at level l - 1.
    """

    pieces: tuple[Piece, ...] = ()

    def __post_init__(self) -> None:
        keys = [_piece_key(pc) for pc in self.pieces]
        if any(b <= a for a, b in zip(keys, keys[1:])):
            raise ValueError("pieces are not in canonical (level, left, right) order")
        for i, pc in enumerate(self.pieces):
            supported = pc.level == 0
            for j, other in enumerate(self.pieces):
                if i == j or not concurrent(pc.polymer, other.polymer):
                    continue
                if other.level == pc.level:
                    raise ValueError(f"concurrent pieces {other} and {pc} share a level")
                if other.level == pc.level - 1:
                    supported = True
            if not supported:
                raise ValueError(f"piece {pc} has no support one level below")

    def __bool__(self) -> bool:
        return bool(self.pieces)

    @property
    def total_length(self) -> int:
        return sum(pc.polymer.length for pc in self.pieces)

    @property
    def polymers(self) -> tuple[Polymer, ...]:
        """Canonical linearization: re-dropping it reproduces the heap."""
        return tuple(pc.polymer for pc in self.pieces)

    def min_left(self) -> int:
        if not self.pieces:
            raise ValueError("empty heap has no extent")
        return min(pc.polymer.left for pc in self.pieces)

    def max_right(self) -> int:
        if not self.pieces:
            raise ValueError("empty heap has no extent")
        return max(pc.polymer.right for pc in self.pieces)

    def shifted(self, dx: int) -> "Heap":
        # a horizontal shift preserves canonicity, no need to re-validate
        return _trusted_heap(
            tuple(Piece(Polymer(pc.polymer.left + dx, pc.polymer.right + dx), pc.level) for pc in self.pieces)
        )

    def to_triples(self) -> list[list[int]]:
        """Serialize as [left, right, level] triples in canonical order."""
        return [[pc.polymer.left, pc.polymer.right, pc.level] for pc in self.pieces]

    def __repr__(self) -> str:
        inner = ", ".join(f"{pc.polymer}@{pc.level}" for pc in self.pieces)
        return f"Heap({inner})"


def _trusted_heap(pieces: tuple[Piece, ...]) -> Heap:
    """Construct without validation; callers guarantee canonical form."""
    h = object.__new__(Heap)
    object.__setattr__(h, "pieces", pieces)
    return h


EMPTY_HEAP = Heap()


def heap_from_sequence(polymers: Iterable[Polymer]) -> Heap:
    """Drop the polymers in order and return the fallen configuration.

    Each polymer lands at level 0 when no earlier polymer is concurrent
    to it, else one above the highest earlier concurrent polymer.
    Sequences differing by swaps of adjacent non-concurrent polymers
    give equal heaps.
    """
    placed: list[Piece] = []
    for pol in polymers:
        level = 0
        for prev in placed:
            if concurrent(prev.polymer, pol):
                level = max(level, prev.level + 1)
        placed.append(Piece(pol, level))
    # the drop rule itself guarantees the canonical-form invariants
    return _trusted_heap(tuple(sorted(placed, key=_piece_key)))


def product(h1: Heap, h2: Heap) -> Heap:
    """Drop ``h2`` on top of ``h1``."""
    return heap_from_sequence(h1.polymers + h2.polymers)


def _upward_closure(h: Heap, piece: Piece) -> set[Piece]:
    # pieces reachable from `piece` by chains of concurrent pieces with
    # strictly increasing levels
    above = {piece}
    changed = True
    while changed:
        changed = False
        for cand in h.pieces:
            if cand in above:
                continue
            for member in above:
                if cand.level > member.level and concurrent(cand.polymer, member.polymer):
                    above.add(cand)
                    changed = True
                    break
    return above


def push(h: Heap, piece: Piece) -> tuple[Heap, Heap]:
    """Factor ``h`` by pushing ``piece``: returns (rest, pyramid).

    The second factor is the pyramid formed by ``piece`` and everything
    resting above it (its upward dependence closure); the first factor
    is the rest.  ``product(rest, pyramid) == h``.
    """
    if piece not in h.pieces:
        raise ValueError(f"piece {piece} is not in the heap")
    above = _upward_closure(h, piece)
    # the complement of an upward closure keeps its levels and supports
    rest = tuple(pc for pc in h.pieces if pc not in above)
    pyramid = heap_from_sequence([pc.polymer for pc in h.pieces if pc in above])
    return _trusted_heap(rest), pyramid


def minimal_pieces(h: Heap) -> list[Piece]:
    """Ground (level 0) pieces, sorted by left endpoint."""
    return [pc for pc in h.pieces if pc.level == 0]


def maximal_pieces(h: Heap) -> list[Piece]:
    """Pieces with nothing above them, sorted by left endpoint."""
    out = []
    for pc in h.pieces:
        if not any(
            other.level > pc.level and concurrent(other.polymer, pc.polymer)
            for other in h.pieces
        ):
            out.append(pc)
    out.sort(key=lambda pc: pc.polymer.left)
    return out


def is_pyramid(h: Heap) -> bool:
    """True when the heap has exactly one minimal (ground) piece."""
    return bool(h.pieces) and sum(1 for pc in h.pieces if pc.level == 0) == 1


def is_half_pyramid(h: Heap) -> bool:
    """Pyramid with no polymer extending left of its minimal polymer."""
    if not is_pyramid(h):
        return False
    return h.min_left() == h.pieces[0].polymer.left


def is_connected(h: Heap) -> bool:
    """True when the union of the polymer intervals is one real interval.

    The empty heap is not connected by convention.
    """
    if not h.pieces:
        return False
    reach: int | None = None
    for pol in sorted(h.polymers):
        if reach is None:
            reach = pol.right
        elif pol.left > reach:
            return False
        else:
            reach = max(reach, pol.right)
    return True


def connected_components(h: Heap) -> list[Heap]:
    """Split into maximal sub-heaps with interval-connected support, left to right."""
    groups: list[list[Piece]] = []
    reach: int | None = None
    for pc in sorted(h.pieces, key=lambda pc: (pc.polymer.left, pc.polymer.right)):
        if reach is None or pc.polymer.left > reach:
            groups.append([pc])
            reach = pc.polymer.right
        else:
            groups[-1].append(pc)
            reach = max(reach, pc.polymer.right)
    # pieces interact only within their component, so levels carry over
    return [_trusted_heap(tuple(sorted(grp, key=_piece_key))) for grp in groups]


def left_half_width(h: Heap) -> int:
    """How far the pyramid reaches left of its minimal polymer's left endpoint."""
    if not is_pyramid(h):
        raise ValueError("left_half_width is only defined for pyramids")
    return h.pieces[0].polymer.left - h.min_left()


def canonical_translate(h: Heap) -> Heap:
    """Horizontal shift putting the minimum left endpoint at 0."""
    if not h.pieces:
        return h
    return h.shifted(-h.min_left())


@dataclass(frozen=True)
class NordicQuadruple:
    """Factorisation data of a non-pyramid connected heap.

    ``c1`` is the leftmost connected component left over after pushing
    the rightmost minimal polymer, ``k`` the ground offset of the pushed
    polymer once ``c1`` ends at column -1, ``h`` the heap squeezed into
    the strip [0, k-1], and ``p`` the pushed pyramid.  ``c1`` and ``p``
    are kept up to translation; ``h`` is absolute.
    """

    c1: Heap
    k: int
    h: Heap
    p: Heap

    def __post_init__(self) -> None:
        if not self.c1.pieces or not is_connected(self.c1):
            raise ValueError("c1 must be a non-empty connected heap")
        if self.k < 0:
            raise ValueError("k must be non-negative")
        if not is_pyramid(self.p):
            raise ValueError("p must be a pyramid")
        if left_half_width(self.p) < self.k + 1:
            raise ValueError(
                f"pyramid left half-width {left_half_width(self.p)} must exceed k={self.k}"
            )
        for pc in self.h.pieces:
            if pc.polymer.left < 0 or pc.polymer.right > self.k - 1:
                raise ValueError(f"piece {pc} of h falls outside the strip [0, {self.k - 1}]")
        if self.k == 0 and self.h.pieces:
            raise ValueError("k = 0 leaves no room for h")

    def to_json_dict(self) -> dict:
        return {
            "c1": self.c1.to_triples(),
            "k": self.k,
            "h": self.h.to_triples(),
            "p": self.p.to_triples(),
        }
