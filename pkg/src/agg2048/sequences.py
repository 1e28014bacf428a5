"""Tile/coin value sequences.

A :class:`TileValueSequence` is a restartable source of a strictly
increasing stream of positive integers whose first element is 1.  Each
call to ``iter()`` yields a fresh single-consumer iterator; constructors
are pure and hold no global state.

Builtin sequences (OEIS ids for reference):

========  ==========  =================================================
name      OEIS        values
========  ==========  =================================================
pow2      A000079     1, 2, 4, 8, ...
fib       A000045     1, 2, 3, 5, 8, 13, ...
mersenne  A000225     1, 3, 7, 15, ...
primes1   A000040+1   1, 2, 3, 5, 7, 11, ...
practical A005153     1, 2, 4, 6, 8, 12, 16, ...
smooth3   A003586     1, 2, 3, 4, 6, 8, 9, 12, ...
threes    A029744     1, 2, 3, 4, 6, 8, 12, ...
fives     --          1, 2, 3, 5, 10, 20, 40, ...
twocoin   A126684     1, 2, 4, 5, 8, 10, 16, 17, ...
naturals  A000027     1, 2, 3, 4, ...  (bounded gaps edge case)
========  ==========  =================================================
"""

from __future__ import annotations

import heapq
import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Iterator

import numpy as np

from .backend import practical_mask, primes_upto
from .errors import SequenceError, UnknownSequenceError

PRACTICAL_SEGMENT = 1 << 16
PRIME_SEGMENT = 1 << 20


class TileValueSequence:
    """Restartable stream of strictly increasing values starting at 1."""

    def __init__(self, name: str, factory: Callable[[], Iterator[int]],
                 finite: bool = False):
        self.name = name
        self._factory = factory
        self.finite = finite

    def __iter__(self) -> Iterator[int]:
        return self._factory()

    def __repr__(self):
        return f"TileValueSequence({self.name!r})"

    def members(self) -> "MemberIndex":
        """Fresh membership/lookup index backed by its own iterator."""
        return MemberIndex(self)

    def prefix(self, k: int) -> list[int]:
        """First k values (fewer if the sequence is shorter)."""
        out = []
        for v in self:
            out.append(v)
            if len(out) == k:
                break
        return out


def _check_value(v, where: str) -> None:
    if isinstance(v, bool) or not isinstance(v, int):
        raise SequenceError(f"value at {where} is not an integer: {v!r}")
    if v < 1:
        raise SequenceError(f"value at {where} must be positive, got {v}")


class MemberIndex:
    """Lazy sorted cache of a sequence's values with bisect lookups.

    Single-consumer like the iterator that backs it; create one per
    computation that needs membership tests or predecessor queries.
    """

    def __init__(self, seq: TileValueSequence):
        self._it = iter(seq)
        self._vals: list[int] = []
        self._done = False

    def _pull(self) -> None:
        try:
            self._vals.append(next(self._it))
        except StopIteration:
            self._done = True

    def _extend_to(self, x: int) -> None:
        # cache every member <= x
        while not self._done and (not self._vals or self._vals[-1] <= x):
            self._pull()

    def contains(self, v: int) -> bool:
        if v < 1:
            return False
        self._extend_to(v)
        i = bisect_left(self._vals, v)
        return i < len(self._vals) and self._vals[i] == v

    def largest_leq(self, x: int) -> int | None:
        """Largest member <= x, or None (cannot happen for x >= 1)."""
        self._extend_to(x)
        i = bisect_right(self._vals, x)
        return self._vals[i - 1] if i else None

    def pred(self, x: int) -> int | None:
        """Largest member strictly below x."""
        self._extend_to(x)
        i = bisect_left(self._vals, x)
        return self._vals[i - 1] if i else None

    def values_up_to(self, x: int) -> list[int]:
        self._extend_to(x)
        return self._vals[: bisect_right(self._vals, x)]


# ---------------------------------------------------------------------------
# builtin generators
# ---------------------------------------------------------------------------

def _pow2() -> Iterator[int]:
    v = 1
    while True:
        yield v
        v *= 2


def _fib() -> Iterator[int]:
    a, b = 1, 2
    while True:
        yield a
        a, b = b, a + b


def _mersenne() -> Iterator[int]:
    v = 2
    while True:
        yield v - 1
        v *= 2


def _threes() -> Iterator[int]:
    yield 1
    yield 2
    k = 0
    while True:
        yield 3 << k
        yield 4 << k
        k += 1


def _fives() -> Iterator[int]:
    yield 1
    yield 2
    yield 3
    v = 5
    while True:
        yield v
        v *= 2


def _naturals() -> Iterator[int]:
    v = 1
    while True:
        yield v
        v += 1


def _smooth3() -> Iterator[int]:
    heap = [1]
    seen = {1}
    while True:
        v = heapq.heappop(heap)
        yield v
        for m in (2 * v, 3 * v):
            if m not in seen:
                seen.add(m)
                heapq.heappush(heap, m)


def _moser_de_bruijn(k: int) -> int:
    # k's binary digits, re-read in base 4
    v = 0
    bit = 0
    while k:
        if k & 1:
            v |= 1 << (2 * bit)
        k >>= 1
        bit += 1
    return v


def _twocoin() -> Iterator[int]:
    # merge of the base-4-digits-0/1 numbers and their doubles: binary
    # expansions with all odd bit positions zero, or all even positions zero
    i = j = 1
    a, b = _moser_de_bruijn(1), 2 * _moser_de_bruijn(1)
    while True:
        if a < b:
            yield a
            i += 1
            a = _moser_de_bruijn(i)
        else:
            yield b
            j += 1
            b = 2 * _moser_de_bruijn(j)


def prime_stream(segment: int = PRIME_SEGMENT) -> Iterator[int]:
    """All primes, ascending, via a segmented numpy sieve."""
    lo = 2
    while True:
        hi = lo + segment
        sieve = np.ones(hi - lo, dtype=bool)
        for p in primes_upto(math.isqrt(hi - 1)).tolist():
            start = max(p * p, ((lo + p - 1) // p) * p)
            sieve[start - lo :: p] = False
        yield from (lo + np.flatnonzero(sieve)).tolist()
        lo = hi


def _primes1() -> Iterator[int]:
    yield 1
    yield from prime_stream()


def _practical_gen(segment: int = PRACTICAL_SEGMENT) -> Iterator[int]:
    lo = 1
    while True:
        hi = lo + segment
        mask = practical_mask(lo, hi)
        yield from (lo + np.flatnonzero(mask)).tolist()
        lo = hi


def practical_stream(segment: int = PRACTICAL_SEGMENT) -> TileValueSequence:
    """Practical numbers in increasing order (segmented sieve)."""
    return TileValueSequence("practical", lambda: _practical_gen(segment))


_BUILTINS: dict[str, Callable[[], Iterator[int]]] = {
    "pow2": _pow2,
    "fib": _fib,
    "mersenne": _mersenne,
    "primes1": _primes1,
    "practical": _practical_gen,
    "smooth3": _smooth3,
    "threes": _threes,
    "fives": _fives,
    "twocoin": _twocoin,
    "naturals": _naturals,
}

BUILTIN_NAMES = tuple(sorted(_BUILTINS))


def builtin_sequence(name: str) -> TileValueSequence:
    """Look up a builtin sequence by its (lowercase) name."""
    try:
        factory = _BUILTINS[name]
    except KeyError:
        raise UnknownSequenceError(
            f"unknown sequence {name!r}; choose from {', '.join(BUILTIN_NAMES)}"
        ) from None
    return TileValueSequence(name, factory)


def from_integers(values: Iterable[int]) -> TileValueSequence:
    """Finite sequence over an explicit list; validated eagerly."""
    vals = list(values)
    if not vals:
        raise SequenceError("explicit sequence is empty (missing leading 1)")
    for i, v in enumerate(vals):
        _check_value(v, f"index {i}")
        if i == 0 and v != 1:
            raise SequenceError(f"first value must be 1, got {v} at index 0")
        if i > 0 and v <= vals[i - 1]:
            raise SequenceError(
                f"not strictly increasing at index {i} ({v} after {vals[i - 1]})")
    return TileValueSequence("explicit", lambda: iter(vals), finite=True)


def _file_values(path: Path) -> Iterator[int]:
    prev = None
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                v = int(line)
            except ValueError:
                raise SequenceError(
                    f"{path}: line {lineno}: not an integer: {line!r}") from None
            try:
                _check_value(v, f"line {lineno}")
                if prev is None and v != 1:
                    raise SequenceError(f"first value must be 1, got {v} at line {lineno}")
                if prev is not None and v <= prev:
                    raise SequenceError(
                        f"not strictly increasing at line {lineno} ({v} after {prev})")
            except SequenceError as exc:
                raise SequenceError(f"{path}: {exc}") from None
            prev = v
            yield v
    if prev is None:
        raise SequenceError(f"{path}: empty sequence (missing leading 1)")


def from_file(path) -> TileValueSequence:
    """Sequence streamed lazily from a text file.

    Format: one base-10 integer per line; blank lines and ``#`` comments
    are ignored.  Monotonicity and the leading 1 are checked as values
    are consumed.
    """
    path = Path(path)
    if not path.is_file():
        raise SequenceError(f"{path}: no such file")
    return TileValueSequence(str(path), lambda: _file_values(path), finite=True)


# ---------------------------------------------------------------------------
# practical-number test
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, exponent) pairs, primes ascending."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prev = 1
        for p, e in self.pairs:
            if p <= prev:
                raise SequenceError(
                    f"factorization primes must be distinct and ascending, got {p}")
            if e < 1:
                raise SequenceError(f"exponent for prime {p} must be >= 1, got {e}")
            prev = p

    def value(self) -> int:
        n = 1
        for p, e in self.pairs:
            n *= p**e
        return n


def factorization_of(n: int) -> Factorization:
    """Trial-division factorization (convenience for tests and the CLI)."""
    if n < 1:
        raise SequenceError(f"cannot factor {n}")
    pairs = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            pairs.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        pairs.append((m, 1))
    return Factorization(tuple(pairs))


def is_practical(n: int, f: Factorization) -> bool:
    """Stewart-Sierpinski criterion.

    n is practical iff n = 1, or n is even and each prime factor p (in
    ascending order) is at most 1 + sigma of the part already absorbed.
    """
    if n < 1:
        raise SequenceError(f"practicality is defined for positive integers, not {n}")
    if f.value() != n:
        raise SequenceError(
            f"factorization {f.pairs} is for {f.value()}, not {n}")
    sig = 1
    for p, e in f.pairs:
        if p > sig + 1:
            return False
        sig *= (p ** (e + 1) - 1) // (p - 1)
    return True
