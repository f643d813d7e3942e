"""Animals on the directed square lattice with next-nearest-neighbour bonds.

Sites are (x, y) integer pairs.  The directed arcs are (-1,0), (-1,1),
(0,1), (1,1) and (1,0); their symmetrisation is king-move adjacency,
which defines connectivity.  An animal is a finite king-connected set of
sites kept in canonical translation (min x = min y = 0).  The maximal
horizontal runs of sites (segments) are the strongly connected
components of the animal under the arcs.

Enumeration grows animals cell by cell from a root, each candidate cell
being either consumed or permanently banned, so every fixed animal is
produced exactly once without a deduplication table.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, NamedTuple

Site = tuple[int, int]

ARCS: tuple[Site, ...] = ((-1, 0), (-1, 1), (0, 1), (1, 1), (1, 0))
KING_MOVES: tuple[Site, ...] = tuple(
    sorted({(dx, dy) for dx, dy in ARCS} | {(-dx, -dy) for dx, dy in ARCS})
)

# enumeration guard, overridable with force=True
MAX_AREA = {"all": 10, "multi": 10, "directed": 12, "half": 12}


class Segment(NamedTuple):
    """Maximal horizontal run of sites at one ordinate."""

    y: int
    xmin: int
    xmax: int


@dataclass(frozen=True)
class Animal:
    """King-connected site set, canonical translation, sorted by (y, x)."""

    sites: tuple[Site, ...]

    def __post_init__(self) -> None:
        if not self.sites:
            raise ValueError("an animal has at least one site")
        if list(self.sites) != sorted(set(self.sites), key=lambda s: (s[1], s[0])):
            raise ValueError("sites must be distinct and sorted by (y, x)")
        if min(x for x, _ in self.sites) != 0 or min(y for _, y in self.sites) != 0:
            raise ValueError("animal is not in canonical translation")
        cells = set(self.sites)
        stack = [self.sites[0]]
        seen = {self.sites[0]}
        while stack:
            x, y = stack.pop()
            for dx, dy in KING_MOVES:
                nb = (x + dx, y + dy)
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        if len(seen) != len(cells):
            raise ValueError("sites are not king-connected")
        xs = {x for x, _ in self.sites}
        if xs != set(range(min(xs), max(xs) + 1)):
            raise ValueError("occupied abscissas must form an interval")

    @classmethod
    def from_sites(cls, sites: Iterable[Site]) -> "Animal":
        pts = list(sites)
        if not pts:
            raise ValueError("an animal has at least one site")
        dx = min(x for x, _ in pts)
        dy = min(y for _, y in pts)
        moved = sorted({(x - dx, y - dy) for x, y in pts}, key=lambda s: (s[1], s[0]))
        return cls(tuple(moved))

    @property
    def area(self) -> int:
        return len(self.sites)

    @property
    def width(self) -> int:
        return max(x for x, _ in self.sites) + 1

    def to_pairs(self) -> list[list[int]]:
        """Serialize as [x, y] pairs in lexicographic (x, y) order."""
        return [[x, y] for x, y in sorted(self.sites)]

    def __repr__(self) -> str:
        return f"Animal({list(self.sites)})"


def segments(a: Animal) -> list[Segment]:
    """Maximal horizontal runs, sorted by (y, xmin)."""
    out: list[Segment] = []
    for x, y in a.sites:  # sites come sorted by (y, x)
        if out and out[-1].y == y and out[-1].xmax == x - 1:
            out[-1] = Segment(y, out[-1].xmin, x)
        else:
            out.append(Segment(y, x, x))
    return out


def bottom_profile(a: Animal) -> list[int]:
    """Ordinate of the bottommost site per abscissa, indexed 0..width-1.

    Columns outside the occupied interval are conceptually at +infinity;
    inside it every column carries a site, so the list is total.
    """
    prof: dict[int, int] = {}
    for x, y in a.sites:
        if x not in prof or y < prof[x]:
            prof[x] = y
    return [prof[x] for x in range(len(prof))]


def _runs(profile: list[int]) -> list[tuple[int, int, int]]:
    # maximal constant runs as (xmin, xmax, value)
    runs: list[tuple[int, int, int]] = []
    for x, v in enumerate(profile):
        if runs and runs[-1][2] == v and runs[-1][1] == x - 1:
            runs[-1] = (runs[-1][0], x, v)
        else:
            runs.append((x, x, v))
    return runs


def _sources_keystones(profile: list[int]) -> tuple[list[Site], list[Site]]:
    runs = _runs(profile)
    srcs: list[Site] = []
    keys: list[Site] = []
    for i, (xmin, _, v) in enumerate(runs):
        left = runs[i - 1][2] if i > 0 else None  # None plays +infinity
        right = runs[i + 1][2] if i + 1 < len(runs) else None
        if (left is None or left > v) and (right is None or right > v):
            srcs.append((xmin, v))
        elif left is not None and left < v and right is not None and right < v:
            keys.append((xmin, v))
    return srcs, keys


def sources(a: Animal) -> list[Site]:
    """Leftmost sites of the local minimum runs of the bottom profile."""
    return _sources_keystones(bottom_profile(a))[0]


def keystones(a: Animal) -> list[Site]:
    """Leftmost sites of the local maximum runs of the bottom profile."""
    return _sources_keystones(bottom_profile(a))[1]


def _forward_closure(cells: frozenset[Site] | set[Site], starts: Iterable[Site]) -> set[Site]:
    seen = set(starts)
    stack = list(seen)
    while stack:
        x, y = stack.pop()
        for dx, dy in ARCS:
            nb = (x + dx, y + dy)
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return seen


def reachable_from(a: Animal, s: Site) -> frozenset[Site]:
    """Sites reachable from ``s`` along directed arcs inside the animal."""
    if s not in a.sites:
        raise ValueError(f"site {s} is not in the animal")
    return frozenset(_forward_closure(frozenset(a.sites), [s]))


def is_directed(a: Animal) -> bool:
    """True when all sites are reachable from the conventional source.

    The source is the leftmost site of the bottommost segment, segments
    ordered by (y, xmin).
    """
    bottom = segments(a)[0]
    src = (bottom.xmin, bottom.y)
    return len(_forward_closure(set(a.sites), [src])) == a.area


def left_half_width_animal(a: Animal) -> int:
    """Distance from the source column to the leftmost column; 0 = half-animal."""
    if not is_directed(a):
        raise ValueError("left half-width is only defined for directed animals")
    bottom = segments(a)[0]
    return bottom.xmin  # canonical translation puts the leftmost column at 0


def _is_multi_sites(cells: frozenset[Site] | set[Site]) -> bool:
    prof: dict[int, int] = {}
    for x, y in cells:
        if x not in prof or y < prof[x]:
            prof[x] = y
    xmin = min(prof)
    profile = [prof[x] for x in range(xmin, max(prof) + 1)]
    srcs, keys = _sources_keystones(profile)
    if xmin:
        srcs = [(x + xmin, y) for x, y in srcs]
        keys = [(x + xmin, y) for x, y in keys]
    if len(_forward_closure(cells, srcs)) != len(cells):
        return False
    src_set = set(srcs)
    for t in keys:
        tx, ty = t
        forbidden = {k for k in keys if k[1] == ty and k != t}
        # sites from which t can be fed without crossing another keystone
        # at the same height (reverse search along the arcs)
        seen = {t}
        stack = [t]
        left_ok = right_ok = False
        while stack and not (left_ok and right_ok):
            x, y = stack.pop()
            for dx, dy in ARCS:
                nb = (x - dx, y - dy)
                if nb in cells and nb not in seen and nb not in forbidden:
                    seen.add(nb)
                    stack.append(nb)
                    if nb in src_set:
                        if nb[0] < tx:
                            left_ok = True
                        elif nb[0] > tx:
                            right_ok = True
        if not (left_ok and right_ok):
            return False
    return True


def is_multi_directed(a: Animal) -> bool:
    """Every site is fed by a source, and every keystone is fed from both
    sides by paths avoiding other keystones at its height."""
    return _is_multi_sites(frozenset(a.sites))


def _check_budget(n: int, kind: str, force: bool) -> None:
    if n < 1:
        raise ValueError("area must be at least 1")
    if not force and n > MAX_AREA[kind]:
        raise ValueError(
            f"area {n} exceeds the default budget {MAX_AREA[kind]} for '{kind}'; "
            "pass force=True to override"
        )


def _grow(n: int, steps: tuple[Site, ...], half: bool, visit: Callable | None) -> list[int]:
    """Rooted exactly-once growth; returns per-area counts of grown sets.

    Cells live in the region y > 0 plus the ray y = 0, x >= 0 (for
    ``half`` additionally x >= 0 everywhere), which pins the canonical
    root of every animal at the origin.  Each frontier cell is either
    consumed or banned for the rest of the branch, so no set appears
    twice.
    """
    counts = [0] * (n + 1)
    origin = (0, 0)
    seen = {origin}
    cells: list[Site] = []

    def rec(frontier: list[Site]) -> None:
        for i, cell in enumerate(frontier):
            cells.append(cell)
            counts[len(cells)] += 1
            if visit is not None:
                visit(cells)
            if len(cells) < n:
                cx, cy = cell
                new: list[Site] = []
                for dx, dy in steps:
                    ny = cy + dy
                    if ny < 0:
                        continue
                    nx = cx + dx
                    if nx < 0 and (half or ny == 0):
                        continue
                    nb = (nx, ny)
                    if nb not in seen:
                        seen.add(nb)
                        new.append(nb)
                rec(frontier[i + 1 :] + new)
                for nb in new:
                    seen.remove(nb)
            cells.pop()

    rec([origin])
    return counts


def count_animals(max_area: int, kind: str = "all", force: bool = False) -> list[int]:
    """Counts per area 1..max_area (index 0 unused).

    Same semantics as ``enumerate_animals`` without materializing the
    animals.
    """
    _check_budget(max_area, kind, force)
    if kind == "all":
        return _grow(max_area, KING_MOVES, False, None)
    if kind == "directed":
        return _grow(max_area, ARCS, False, None)
    if kind == "half":
        return _grow(max_area, ARCS, True, None)
    if kind == "multi":
        counts = [0] * (max_area + 1)

        def visit(cells: list[Site]) -> None:
            if _is_multi_sites(frozenset(cells)):
                counts[len(cells)] += 1

        _grow(max_area, KING_MOVES, False, visit)
        return counts
    raise ValueError(f"unknown animal class {kind!r}")


@lru_cache(maxsize=64)
def _enumerate_animals_cached(n: int, kind: str) -> tuple[Animal, ...]:
    raw: list[tuple[Site, ...]] = []

    def visit(cells: list[Site]) -> None:
        if len(cells) == n:
            raw.append(tuple(cells))

    if kind in ("all", "multi"):
        _grow(n, KING_MOVES, False, visit)
        if kind == "multi":
            raw = [cells for cells in raw if _is_multi_sites(frozenset(cells))]
    elif kind == "directed":
        _grow(n, ARCS, False, visit)
    elif kind == "half":
        _grow(n, ARCS, True, visit)
    else:
        raise ValueError(f"unknown animal class {kind!r}")
    out = [Animal.from_sites(cells) for cells in raw]
    out.sort(key=lambda a: a.sites)
    return tuple(out)


def enumerate_animals(n: int, kind: str = "all", force: bool = False) -> list[Animal]:
    """All animals of area ``n`` up to translation, canonical and sorted."""
    _check_budget(n, kind, force)
    return list(_enumerate_animals_cached(n, kind))


def directed_lw_counts(max_area: int, force: bool = False) -> list[list[int]]:
    """hist[n][j] = number of directed animals of area n and left half-width j."""
    _check_budget(max_area, "directed", force)
    hist: list[list[int]] = [[0] * (max_area + 1) for _ in range(max_area + 1)]

    def visit(cells: list[Site]) -> None:
        lw = -min(x for x, _ in cells)  # source sits at x = 0
        hist[len(cells)][lw] += 1

    _grow(max_area, ARCS, False, visit)
    return hist
