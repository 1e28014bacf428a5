"""The abstract merge game on n indistinguishable cells.

Positions are multisets of tile values.  A step places a value-1 tile
into an empty cell and may then perform any sequence of merges, each
combining tiles whose sum is again an allowed value.  ``bounds_stream``
computes the per-cell-count score bounds (largest single tile, largest
total) with the constant-extra-space streaming recurrence;
``enumerate_reachable`` is the brute-force BFS oracle against which the
closed-form characterization is tested.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Union

from .change import DEFAULT_SCAN_CAP
from .errors import IllegalStepError, ResourceLimitError, SequenceError, UnreachableError
from .sentinel import UNBOUNDED
from .sequences import MemberIndex, TileValueSequence

SequenceLike = Union[TileValueSequence, MemberIndex]


@dataclass(frozen=True)
class BoundState:
    """Score bounds for the game on n cells.

    `single` is the largest achievable single tile value, `total` the
    largest achievable total position value; either may be UNBOUNDED.
    While finite, total(n) = total(n-1) + single(n).
    """

    n: int
    single: object  # int or UNBOUNDED
    total: object


@dataclass(frozen=True)
class Position:
    """Multiset of tile values occupying at most `cells` cells."""

    tiles: tuple[int, ...]
    cells: int

    def __post_init__(self):
        object.__setattr__(self, "tiles", tuple(sorted(self.tiles)))
        if len(self.tiles) > self.cells:
            raise ValueError(
                f"{len(self.tiles)} tiles do not fit in {self.cells} cells")
        if any(t < 1 for t in self.tiles):
            raise ValueError("tile values must be positive")

    @property
    def total(self) -> int:
        return sum(self.tiles)


@dataclass(frozen=True)
class StepRecord:
    """One game step: the forced value-1 placement, then ordered merges.

    Each merge is (consumed values, produced value); the produced value
    must equal the consumed sum and be an allowed tile value.
    """

    merges: tuple[tuple[tuple[int, ...], int], ...] = ()
    placement: int = 1


def bounds_stream(A: TileValueSequence, scan_cap: int = DEFAULT_SCAN_CAP,
                  threshold: int | None = None) -> Iterator[BoundState]:
    """(single, total) bounds for n = 1, 2, ... from the value stream.

    This is the streaming recurrence: walk the values, and whenever the
    gap to the next value exceeds the running total, the current value
    becomes the next single-tile bound and is folded into the total.
    Beyond the sequence generator it touches a constant number of
    integer registers.  An UNBOUNDED state is emitted when the sequence
    is exhausted or `scan_cap` values pass without a sufficient gap;
    with `threshold` set, the stream ends quietly once no further total
    <= threshold can exist.
    """
    n = 0
    single, total = 1, 0
    scanned = 0
    for tile in A:
        while tile > single + total:
            if threshold is not None and single + total > threshold:
                return
            total += single
            n += 1
            yield BoundState(n, single, total)
            scanned = 0
        single = tile
        scanned += 1
        if threshold is not None and single > threshold:
            return
        if scanned >= scan_cap:
            yield BoundState(n + 1, UNBOUNDED, UNBOUNDED)
            return
    yield BoundState(n + 1, UNBOUNDED, UNBOUNDED)


def _singles_prefix(A: TileValueSequence, n: int, need: int,
                    scan_cap: int) -> list[int]:
    """Single(1..n), truncated as soon as the values reach `need`.

    Entries beyond the returned list are guaranteed to be >= need (by
    monotonicity of the single-tile bounds) or UNBOUNDED; callers only
    compare against tile values <= need, so truncation is safe.
    """
    singles: list[int] = []
    single, total = 1, 0
    scanned = 0
    for tile in A:
        while tile > single + total and len(singles) < n:
            total += single
            singles.append(single)
            scanned = 0
            if single >= need:
                return singles
        if len(singles) >= n:
            return singles
        single = tile
        if single >= need:
            return singles
        scanned += 1
        if scanned >= scan_cap:
            return singles
    return singles  # exhausted: remaining bounds UNBOUNDED


def _check_tiles_in_sequence(tiles, idx: MemberIndex) -> None:
    for t in sorted(set(tiles)):
        if not idx.contains(t):
            raise SequenceError(f"tile value {t} is not in the sequence")


def is_reachable(P: Position, A: TileValueSequence,
                 scan_cap: int = DEFAULT_SCAN_CAP) -> bool:
    """Reachability of P from the empty position.

    True iff P's tile values, zero-padded to the cell count and sorted
    ascending, are dominated index-wise by the single-tile bounds.
    """
    _check_tiles_in_sequence(P.tiles, A.members())
    if not P.tiles:
        return True
    vmax = P.tiles[-1]
    singles = _singles_prefix(A, P.cells, vmax, scan_cap)
    pad = P.cells - len(P.tiles)
    for i, v in enumerate(P.tiles):
        j = pad + i  # index in the zero-padded sorted vector
        if j < len(singles) and v > singles[j]:
            return False
        # beyond the prefix, Single(j+1) >= vmax >= v
    return True


def strategy_to_reach(P: Position, A: TileValueSequence,
                      scan_cap: int = DEFAULT_SCAN_CAP) -> list[StepRecord]:
    """A legal step sequence from the empty position to exactly P.

    Double recursion: build the largest tile first (splitting a value x
    into its predecessor y in the sequence plus a total of x-y on the
    remaining cells), then the remaining tiles on the remaining cells.
    The number of steps equals P's total value.
    """
    if not is_reachable(P, A, scan_cap):
        raise UnreachableError(f"position {P.tiles} is not reachable")
    idx = A.members()
    budget = P.total
    singles = _singles_prefix(A, P.cells, max(budget, 1), scan_cap)

    def single_cap(ncells: int) -> int | None:
        # None means "no binding cap" (Single(ncells) >= any value we build)
        return singles[ncells - 1] if ncells - 1 < len(singles) else None

    def reach_single(x: int, ncells: int) -> list[StepRecord]:
        if x == 1:
            return [StepRecord()]
        y = idx.pred(x)
        steps = reach_single(y, ncells)
        sub, ms = reach_total(x - y, ncells - 1)
        steps.extend(sub)
        consumed = tuple(sorted((y, *ms)))
        steps[-1] = StepRecord(steps[-1].merges + ((consumed, x),))
        return steps

    def reach_total(t: int, ncells: int) -> tuple[list[StepRecord], tuple[int, ...]]:
        if t == 0:
            return [], ()
        cap = single_cap(ncells)
        v = idx.largest_leq(t if cap is None else min(t, cap))
        steps = reach_single(v, ncells)
        sub, ms = reach_total(t - v, ncells - 1)
        steps.extend(sub)
        return steps, tuple(sorted((v, *ms)))

    steps: list[StepRecord] = []
    ncells = P.cells
    for v in sorted(P.tiles, reverse=True):
        steps.extend(reach_single(v, ncells))
        ncells -= 1
    return steps


def replay(steps: list[StepRecord], n: int, A: TileValueSequence) -> Position:
    """Simulate a step list from the empty position, checking legality."""
    idx = A.members()
    board: Counter[int] = Counter()
    size = 0
    for si, step in enumerate(steps, 1):
        if step.placement != 1:
            raise IllegalStepError(f"step {si}: placement value must be 1")
        if size == n:
            raise IllegalStepError(f"step {si}: board full, game already over")
        board[1] += 1
        size += 1
        for mi, (consumed, produced) in enumerate(step.merges, 1):
            if len(consumed) < 2:
                raise IllegalStepError(
                    f"step {si} merge {mi}: needs at least two tiles")
            if sum(consumed) != produced:
                raise IllegalStepError(
                    f"step {si} merge {mi}: produced {produced} != sum {sum(consumed)}")
            if not idx.contains(produced):
                raise IllegalStepError(
                    f"step {si} merge {mi}: merged value {produced} not in sequence")
            need = Counter(consumed)
            if any(board[v] < c for v, c in need.items()):
                raise IllegalStepError(
                    f"step {si} merge {mi}: tiles {consumed} not all present")
            board.subtract(need)
            board[produced] += 1
            size -= len(consumed) - 1
    tiles = tuple(sorted(board.elements()))
    return Position(tiles, n)


def _merge_closure(pos: tuple[int, ...], idx: MemberIndex) -> set[tuple[int, ...]]:
    """Every multiset reachable from `pos` by zero or more merges."""
    out = {pos}
    stack = [pos]
    while stack:
        cur = stack.pop()
        candidates = set()
        for size in range(2, len(cur) + 1):
            for combo in combinations(range(len(cur)), size):
                candidates.add(tuple(cur[i] for i in combo))
        for consumed in candidates:
            s = sum(consumed)
            if not idx.contains(s):
                continue
            remaining = list(cur)
            for v in consumed:
                remaining.remove(v)
            nxt = tuple(sorted(remaining + [s]))
            if nxt not in out:
                out.add(nxt)
                stack.append(nxt)
    return out


def enumerate_reachable(n: int, A: TileValueSequence, value_cap: int,
                        max_positions: int = 500_000) -> set[tuple[int, ...]]:
    """Exhaustive BFS closure of the game, as sorted tile tuples.

    Every legal step (placement followed by any chain of merges) is
    explored from the empty position, restricted to total value
    <= value_cap.  Intended for small n; raises ResourceLimitError when
    the explored set exceeds `max_positions`.
    """
    idx = A.members()
    seen: set[tuple[int, ...]] = {()}
    queue: deque[tuple[int, ...]] = deque([()])
    while queue:
        pos = queue.popleft()
        if len(pos) == n:
            continue  # board full: the game has ended
        if sum(pos) + 1 > value_cap:
            continue
        placed = tuple(sorted(pos + (1,)))
        for nxt in _merge_closure(placed, idx):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > max_positions:
                    raise ResourceLimitError(
                        f"reachable-set enumeration exceeded {max_positions} positions")
                queue.append(nxt)
    return seen
