"""Cross-module verification suites.

Each suite returns a list of CheckResult; the CLI turns them into
PASS/FAIL lines and an exit code.  The suites pit independent
computations against each other: streaming recurrence vs definitional
scan (minmax), BFS enumeration vs the domination characterization
(reachability), constructed strategies vs the legality replayer
(strategy), and the streams vs published values (golden).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .change import DEFAULT_SCAN_CAP, ggg_scan_table, ggg_stream
from .game import (Position, _singles_prefix, bounds_stream,
                   enumerate_reachable, replay, strategy_to_reach)
from .golden import GOLDEN_TOTALS
from .sentinel import is_unbounded
from .sequences import BUILTIN_NAMES, TileValueSequence, builtin_sequence


@dataclass(frozen=True)
class CheckResult:
    label: str
    ok: bool
    detail: str = ""


def finite_totals(seq: TileValueSequence, threshold: int) -> list[int]:
    """All finite total bounds <= threshold from the streaming recurrence."""
    out = []
    for state in bounds_stream(seq, threshold=threshold):
        if is_unbounded(state.total):
            break
        out.append(state.total)
    return out


def finite_ggg(seq: TileValueSequence, threshold: int) -> list[int]:
    out = []
    for v in ggg_stream(seq, threshold=threshold):
        if is_unbounded(v):
            break
        out.append(v)
    return out


def verify_golden() -> list[CheckResult]:
    results = []
    for name, expected in GOLDEN_TOTALS.items():
        seq = builtin_sequence(name)
        stream = bounds_stream(seq)
        got = []
        # never pull a term past the golden prefix: the next one may need
        # a scan far beyond sieve range (primes1, practical)
        while len(got) < len(expected):
            state = next(stream)
            if is_unbounded(state.total):
                break
            got.append(state.total)
        results.append(CheckResult(
            f"golden totals {name}", got == expected,
            f"got {got}" if got != expected else f"{len(expected)} terms"))
    return results


def verify_minmax(cap: int = 10**5) -> list[CheckResult]:
    """Streaming recurrence == gap recurrence == definitional scan."""
    results = []
    for name in BUILTIN_NAMES:
        seq = builtin_sequence(name)
        totals = finite_totals(seq, cap)
        ggg = finite_ggg(builtin_sequence(name), cap)
        scanned = ggg_scan_table(builtin_sequence(name), cap)
        ok = totals == ggg == scanned
        detail = (f"{len(totals)} terms <= {cap}" if ok else
                  f"totals={totals[:8]} ggg={ggg[:8]} scan={scanned[:8]}")
        results.append(CheckResult(f"minmax {name}", ok, detail))
    return results


def characterization_set(n: int, seq_name: str, cap: int) -> set[tuple[int, ...]]:
    """All positions predicted reachable: sorted zero-padded values
    dominated index-wise by the single-tile bounds, total <= cap."""
    seq = builtin_sequence(seq_name)
    singles = _singles_prefix(seq, n, cap + 1, DEFAULT_SCAN_CAP)
    eff = [singles[i] if i < len(singles) else cap for i in range(n)]
    members = builtin_sequence(seq_name).members().values_up_to(cap)
    out: set[tuple[int, ...]] = set()
    for k in range(n + 1):
        def rec(j: int, minv: int, budget: int, acc: list[int]) -> None:
            if j > k:
                out.add(tuple(acc))
                return
            bound = min(eff[n - k + j - 1], budget)
            for v in members:
                if v > bound:
                    break
                if v >= minv:
                    rec(j + 1, v, budget - v, acc + [v])
        rec(1, 1, cap, [])
    return out


def verify_reachability(cells: int = 3, seq_name: str = "pow2") -> list[CheckResult]:
    """BFS closure == domination characterization, per cell count."""
    results = []
    seq = builtin_sequence(seq_name)
    totals = finite_totals(seq, 10**6)[:cells]
    for n in range(1, cells + 1):
        cap = totals[n - 1]
        bfs = enumerate_reachable(n, builtin_sequence(seq_name), cap)
        predicted = characterization_set(n, seq_name, cap)
        max_total = max(sum(p) for p in bfs)
        ok = bfs == predicted and max_total == cap
        detail = (f"{len(bfs)} positions, max total {max_total}" if ok else
                  f"bfs^pred={sorted(bfs ^ predicted)[:5]} max={max_total} want {cap}")
        results.append(CheckResult(f"reachability {seq_name} n={n}", ok, detail))
    return results


def sample_reachable(seq_name: str, n: int, max_total: int,
                     rng: random.Random) -> Position:
    """A random reachable position: ascending tile picks dominated by
    the single-tile bounds, truncated to the total budget."""
    seq = builtin_sequence(seq_name)
    singles = _singles_prefix(seq, n, max_total + 1, DEFAULT_SCAN_CAP)
    eff = [singles[i] if i < len(singles) else max_total for i in range(n)]
    idx = builtin_sequence(seq_name).members()
    k = rng.randint(0, n)
    tiles: list[int] = []
    budget = max_total
    prev = 1
    for j in range(1, k + 1):
        bound = min(eff[n - k + j - 1], budget)
        pool = [v for v in idx.values_up_to(bound) if v >= prev]
        if not pool:
            break
        v = rng.choice(pool)
        tiles.append(v)
        budget -= v
        prev = v
    return Position(tuple(tiles), n)


def verify_strategy(samples: int = 200, seed: int = 20480,
                    max_cells: int = 5, max_total: int = 100) -> list[CheckResult]:
    """Constructed strategies replay to the target with step count equal
    to the target's total value."""
    rng = random.Random(seed)
    failures = []
    for i in range(samples):
        name = rng.choice(("pow2", "fib"))
        n = rng.randint(1, max_cells)
        pos = sample_reachable(name, n, max_total, rng)
        seq = builtin_sequence(name)
        steps = strategy_to_reach(pos, seq)
        final = replay(steps, n, builtin_sequence(name))
        if final.tiles != pos.tiles or len(steps) != pos.total:
            failures.append((name, pos.tiles, n, final.tiles, len(steps)))
    ok = not failures
    detail = f"{samples} samples" if ok else f"first failure: {failures[0]}"
    return [CheckResult("strategy soundness", ok, detail)]


SUITES = {
    "golden": verify_golden,
    "minmax": verify_minmax,
    "reachability": verify_reachability,
    "strategy": verify_strategy,
}
