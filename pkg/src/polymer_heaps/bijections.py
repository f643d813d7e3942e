"""Projection between animals and heaps, with its inverse constructions.

Projecting an animal replaces each segment of ``s`` sites by a polymer of
length ``s`` and drops the polymers in increasing height order.  The
restriction to directed animals is inverted by the falling construction
(pyramids of polymers), and the restriction to multi-directed animals by
a recursive construction on connected heaps: peel off a maximal polymer,
rebuild the animals of the remaining components, and translate them
vertically until they touch the peeled segment.

The module also hosts the heap enumeration oracles: explicit generation
of heaps by levels (each level an antichain of pairwise non-touching
polymers resting on the previous one) and a memoized census that counts
the same configurations without materializing them.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .heap_core import (
    EMPTY_HEAP,
    Heap,
    NordicQuadruple,
    Piece,
    Polymer,
    _trusted_heap,
    canonical_translate,
    concurrent,
    connected_components,
    heap_from_sequence,
    is_connected,
    is_pyramid,
    left_half_width,
    maximal_pieces,
    minimal_pieces,
    product,
    push,
)
from .lattice_animals import Animal, Site, segments

MAX_LENGTH = 10  # enumeration guard, overridable with force=True

Interval = tuple[int, int]


def project(a: Animal) -> Heap:
    """Heap of the segment projections taken in increasing height order."""
    pols = [Polymer(seg.xmin, seg.xmax + 1) for seg in segments(a)]
    return canonical_translate(heap_from_sequence(pols))


def animal_from_pyramid(p: Heap) -> Animal:
    """The unique directed animal projecting onto the pyramid ``p``.

    The falling construction re-drops segments exactly like their
    polymers, so each piece becomes a run of sites at its own level.
    """
    if not is_pyramid(p):
        raise ValueError("animal_from_pyramid needs a pyramid")
    cells = [
        (x, pc.level) for pc in p.pieces for x in range(pc.polymer.left, pc.polymer.right)
    ]
    return Animal.from_sites(cells)


def _touching_segments(
    c: Heap, pick: Callable[[list[Piece]], Piece] | None
) -> list[tuple[int, int, int]]:
    # returns segments as (left, right, y) triples, y relative to this call
    if len(c.pieces) == 1:
        pol = c.pieces[0].polymer
        return [(pol.left, pol.right, 0)]
    maxima = maximal_pieces(c)
    beta = pick(maxima) if pick else max(maxima, key=lambda pc: (pc.level, pc.polymer.left))
    # removing a maximal piece leaves every level and support in place
    rest = _trusted_heap(tuple(pc for pc in c.pieces if pc != beta))
    out = [(beta.polymer.left, beta.polymer.right, 0)]
    for comp in connected_components(rest):
        sub = _touching_segments(comp, pick)
        touchers = [y for (left, right, y) in sub if concurrent(Polymer(left, right), beta.polymer)]
        if not touchers:
            raise ValueError("component not concurrent to the peeled polymer")
        delta = -1 - max(touchers)
        out.extend((left, right, y + delta) for (left, right, y) in sub)
    return out


def animal_from_connected_heap(
    c: Heap, pick: Callable[[list[Piece]], Piece] | None = None
) -> Animal:
    """The unique multi-directed animal projecting onto the connected heap.

    ``pick`` selects the maximal polymer peeled at each step (default:
    highest level, then rightmost); the result does not depend on it.
    """
    if not c.pieces or not is_connected(c):
        raise ValueError("animal_from_connected_heap needs a non-empty connected heap")
    segs = _touching_segments(c, pick)
    cells = [(x, y) for (left, right, y) in segs for x in range(left, right)]
    return Animal.from_sites(cells)


def random_beta_picker(seed: int) -> Callable[[list[Piece]], Piece]:
    """A reproducible random choice of maximal polymer, for property tests."""
    rng = random.Random(seed)

    def pick(maxima: list[Piece]) -> Piece:
        return rng.choice(maxima)

    return pick


def nordic_decompose(c: Heap) -> NordicQuadruple:
    """Split a non-pyramid connected heap into its quadruple (c1, k, h, p)."""
    if not is_connected(c):
        raise ValueError("nordic_decompose needs a connected heap")
    if is_pyramid(c):
        raise ValueError("nordic_decompose needs a heap with at least two minimal pieces")
    alpha = minimal_pieces(c)[-1]
    rest, pyramid = push(c, alpha)
    comps = connected_components(rest)
    c1 = comps[0]
    shift = -1 - c1.max_right()
    k = alpha.polymer.left + shift
    h_pieces = sorted(
        (
            Piece(pc.polymer.shifted(shift), pc.level)
            for comp in comps[1:]
            for pc in comp.pieces
        ),
        key=lambda pc: (pc.level, pc.polymer.left, pc.polymer.right),
    )
    return NordicQuadruple(
        c1=canonical_translate(c1),
        k=k,
        h=Heap(tuple(h_pieces)),
        p=canonical_translate(pyramid),
    )


def nordic_compose(q: NordicQuadruple) -> Heap:
    """Rebuild the connected heap c1 * h * p encoded by the quadruple."""
    c1 = q.c1.shifted(-1 - q.c1.max_right())
    p = canonical_translate(q.p)
    minimal = p.pieces[0].polymer  # unique ground piece of the pyramid
    p = p.shifted(q.k - minimal.left)
    result = product(product(c1, q.h), p)
    if not is_connected(result) or is_pyramid(result):
        raise ValueError("quadruple does not compose to a non-pyramid connected heap")
    return canonical_translate(result)


# ---------------------------------------------------------------------------
# heap enumeration


def _antichains(
    budget: int, lo: int, hi: int | None, touch: tuple[Interval, ...] | None
) -> Iterator[tuple[Interval, ...]]:
    """Antichains of pairwise non-touching polymers, yielded as sorted tuples.

    Polymers are (left, right) with left >= lo and right <= hi (hi None =
    unbounded) and total length <= budget.  When ``touch`` is given every
    polymer must intersect one of its intervals; without it ``hi`` is
    required, since the right end is otherwise unbounded.
    """
    if touch is None and hi is None:
        raise ValueError("unbounded antichain generation needs touch intervals")
    last_left = max(v for _, v in touch) if touch is not None else hi - 1
    acc: list[Interval] = []

    def rec(start: int, rem: int) -> Iterator[tuple[Interval, ...]]:
        yield tuple(acc)
        if rem < 1:
            return
        for a in range(start, last_left + 1):
            bmax = a + rem if hi is None else min(a + rem, hi)
            for b in range(a + 1, bmax + 1):
                if touch is not None and not any(a <= v and b >= u for u, v in touch):
                    continue
                acc.append((a, b))
                yield from rec(b + 1, rem - (b - a))
                acc.pop()

    yield from rec(lo, budget)


def _stacked_heaps(
    n: int, lo: int, hi: int | None, grounds: Iterable[tuple[Interval, ...]]
) -> Iterator[tuple[Piece, ...]]:
    """Grow heaps level by level; yields the piece tuple of every
    configuration of total length exactly n reachable from the given
    grounds.  Pieces come out sorted by (level, left), i.e. canonical."""
    pieces: list[Piece] = []

    def rec(prev: tuple[Interval, ...], used: int, level: int):
        if used == n:
            yield tuple(pieces)
            return
        for ac in _antichains(n - used, lo, hi, prev):
            if not ac:
                continue
            pieces.extend(Piece(Polymer(a, b), level) for a, b in ac)
            yield from rec(ac, used + sum(b - a for a, b in ac), level + 1)
            del pieces[len(pieces) - len(ac) :]

    for ground in grounds:
        glen = sum(b - a for a, b in ground)
        if not ground or glen > n:
            continue
        pieces.clear()
        pieces.extend(Piece(Polymer(a, b), 0) for a, b in ground)
        yield from rec(ground, glen, 1)


def _check_length_budget(n: int, force: bool) -> None:
    if not force and n > MAX_LENGTH:
        raise ValueError(
            f"total length {n} exceeds the default budget {MAX_LENGTH}; "
            "pass force=True to override"
        )


def _zero_anchored_grounds(n: int) -> Iterator[tuple[Interval, ...]]:
    # ground antichains whose leftmost polymer starts exactly at 0: the
    # per-translation-class representative used by enumerate_heaps
    for b0 in range(1, n + 1):
        for rest in _antichains(n - b0, b0 + 1, n, None):
            yield ((0, b0),) + rest


@lru_cache(maxsize=64)
def _enumerate_heaps_cached(n: int, kind: str, k: int | None) -> tuple[Heap, ...]:
    out: list[Heap]
    if kind in ("all", "connected"):
        # anchoring the leftmost ground piece at 0 picks one representative
        # per translation class, so no deduplication is needed
        out = []
        for pieces in _stacked_heaps(n, -n, n, _zero_anchored_grounds(n)):
            h = canonical_translate(_trusted_heap(pieces))
            if kind == "connected":
                if not is_connected(h):
                    continue
            elif h.max_right() > n:  # width-n window convention for 'all'
                continue
            out.append(h)
    elif kind in ("pyramid", "half_pyramid"):
        lo = 0 if kind == "half_pyramid" else -n
        grounds = (((0, length),) for length in range(1, n + 1))
        out = [
            canonical_translate(_trusted_heap(pieces))
            for pieces in _stacked_heaps(n, lo, n, grounds)
        ]
    elif kind == "within_strip":
        if k < 2:
            return ()
        grounds = _antichains(n, 0, k - 1, None)
        out = [_trusted_heap(pieces) for pieces in _stacked_heaps(n, 0, k - 1, grounds)]
    else:
        raise ValueError(f"unknown heap class {kind!r}")
    out.sort(key=Heap.to_triples)
    return tuple(out)


def enumerate_heaps(
    n: int, kind: str = "all", k: int | None = None, force: bool = False
) -> list[Heap]:
    """All heaps of total length ``n``, each exactly once, sorted.

    Kinds ``all``, ``connected``, ``pyramid`` and ``half_pyramid`` count
    heaps up to horizontal translation; ``all`` is restricted to heaps
    whose canonical span fits in a window of width ``n`` (always true for
    the connected kinds, a convention for disconnected heaps whose gaps
    are otherwise unbounded).  ``within_strip`` takes the strip bound
    ``k`` and counts heaps with every polymer inside [0, k-1] absolutely,
    the empty heap included at n = 0.
    """
    if kind == "within_strip":
        if k is None or k < 0:
            raise ValueError("within_strip needs a strip bound k >= 0")
        if n < 0:
            raise ValueError("need n >= 0")
        if n == 0:
            return [EMPTY_HEAP]
    elif n < 1:
        raise ValueError("need n >= 1")
    _check_length_budget(n, force)
    return list(_enumerate_heaps_cached(n, kind, k if kind == "within_strip" else None))


def _anchored_grounds(k: int, n: int) -> Iterator[tuple[Interval, ...]]:
    # ground antichains with the rightmost polymer starting exactly at k
    for delta in range(1, n + 1):
        right_piece = (k, k + delta)
        if k < 2:
            yield (right_piece,)
        else:
            for others in _antichains(n - delta, 0, k - 1, None):
                yield others + (right_piece,)


def enumerate_anchored_heaps(k: int, n: int, force: bool = False) -> list[Heap]:
    """Heaps with all left endpoints >= 0 whose rightmost minimal polymer
    starts at ``k``, kept in absolute position."""
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    _check_length_budget(n, force)
    out = [
        _trusted_heap(pieces)
        for pieces in _stacked_heaps(n, 0, None, _anchored_grounds(k, n))
    ]
    out.sort(key=Heap.to_triples)
    return out


# ---------------------------------------------------------------------------
# heap census (counting without materializing)


class _HeapCensus:
    """Counts level-stacked continuations above a given level profile.

    A level of a heap is an antichain, fully described by the union of
    its intervals, so the suffix count depends only on that profile and
    on the remaining length budget.  Profiles far from the left wall are
    shifted to a fixed slack, which keeps the memo small.
    """

    def __init__(self, lo: int, hi: int | None):
        self.lo = lo
        self.hi = hi
        self._memo: dict[tuple[Interval, ...], tuple[int, list[int]]] = {}

    def suffix(self, profile: tuple[Interval, ...], rmax: int) -> list[int]:
        """vec[r] = number of continuations of exact additional length r."""
        if self.hi is None:
            slack = profile[0][0] - self.lo
            if slack > rmax:
                d = slack - rmax
                profile = tuple((a - d, b - d) for a, b in profile)
        entry = self._memo.get(profile)
        if entry is not None and entry[0] >= rmax:
            vec = entry[1]
            return vec if entry[0] == rmax else vec[: rmax + 1]
        vec = [0] * (rmax + 1)
        vec[0] = 1
        for ac in _antichains(rmax, self.lo, self.hi, profile):
            if not ac:
                continue
            length = sum(b - a for a, b in ac)
            child = self.suffix(ac, rmax - length)
            for j, cnt in enumerate(child):
                if cnt:
                    vec[length + j] += cnt
        self._memo[profile] = (rmax, vec)
        return vec


def count_strip_heaps(k: int, max_n: int) -> list[int]:
    """counts[n] = heaps of total length n with every polymer in [0, k-1]."""
    if k < 0 or max_n < 0:
        raise ValueError("need k >= 0 and max_n >= 0")
    counts = [0] * (max_n + 1)
    counts[0] = 1  # the empty heap fits in any strip
    if k < 2 or max_n == 0:
        return counts
    census = _HeapCensus(0, k - 1)
    for ground in _antichains(max_n, 0, k - 1, None):
        if not ground:
            continue
        glen = sum(b - a for a, b in ground)
        vec = census.suffix(ground, max_n - glen)
        for j, cnt in enumerate(vec):
            if cnt:
                counts[glen + j] += cnt
    return counts


def count_anchored_heaps(k: int, max_n: int) -> list[int]:
    """counts[n] = heaps with left endpoints >= 0 and rightmost minimal
    polymer starting at ``k``, by total length (same family as
    ``enumerate_anchored_heaps``)."""
    if k < 0 or max_n < 0:
        raise ValueError("need k >= 0 and max_n >= 0")
    counts = [0] * (max_n + 1)
    census = _HeapCensus(0, None)
    for ground in _anchored_grounds(k, max_n):
        glen = sum(b - a for a, b in ground)
        if glen > max_n:
            continue
        vec = census.suffix(ground, max_n - glen)
        for j, cnt in enumerate(vec):
            if cnt:
                counts[glen + j] += cnt
    return counts
