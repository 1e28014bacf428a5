"""Numeric kernels with a numba fast path and a pure-numpy fallback.

The two hot loops in this package are the segmented practical-number
sieve and the minimum-coin dynamic program.  Both have a numba ``@njit``
implementation and a vectorized numpy one; set ``AGG2048_NO_NUMBA=1`` in
the environment (or install without numba) to force the numpy path.
``bench/backend_bench.py`` compares the two.

Kernels work in int64, which is fine for every range the sieve or DP is
asked to cover (caps are well below 2**62); the arbitrary-precision
streaming logic lives outside these kernels.
"""

from __future__ import annotations

import math
import os

import numpy as np

_INT64_SAFE = 1 << 62


def _numba_enabled() -> bool:
    if os.environ.get("AGG2048_NO_NUMBA", "").strip() not in ("", "0"):
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


HAVE_NUMBA = _numba_enabled()


def primes_upto(n: int) -> np.ndarray:
    """All primes <= n as an int64 array (plain numpy sieve)."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve).astype(np.int64)


# ---------------------------------------------------------------------------
# minimum-coin DP
# ---------------------------------------------------------------------------

def _min_coins_dp_loop(coins, x):
    # classic unbounded coin-change DP, amounts ascending, coins outer
    inf = x + 1
    dp = np.full(x + 1, inf, dtype=np.int64)
    dp[0] = 0
    for ci in range(coins.shape[0]):
        c = coins[ci]
        for i in range(c, x + 1):
            v = dp[i - c] + 1
            if v < dp[i]:
                dp[i] = v
    return dp


def _min_coins_dp_numpy(coins, x):
    # binary-splitting relaxation: a shift by c*2^j at cost 2^j, applied
    # for ascending j, composes to any multiplicity of coin c
    inf = np.int64(x + 1)
    dp = np.full(x + 1, inf, dtype=np.int64)
    dp[0] = 0
    for c in coins.tolist():
        step, cnt = c, 1
        while step <= x:
            shifted = np.empty_like(dp)
            shifted[:step] = inf
            np.add(dp[:-step], cnt, out=shifted[step:])
            np.minimum(dp, shifted, out=dp)
            step *= 2
            cnt *= 2
    return dp


# ---------------------------------------------------------------------------
# practical-number segment sieve
# ---------------------------------------------------------------------------
#
# For each n in [lo, hi) the kernels run the Stewart-Sierpinski scan over
# n's prime factors in ascending order: keep sigma (divisor sum) of the
# factored prefix, and each new prime p must satisfy p <= sigma + 1.

def _practical_mask_loop(lo, hi, primes):
    m = hi - lo
    rem = np.empty(m, dtype=np.int64)
    for j in range(m):
        rem[j] = lo + j
    sig = np.ones(m, dtype=np.int64)
    ok = np.ones(m, dtype=np.bool_)
    for pi in range(primes.shape[0]):
        p = primes[pi]
        start = ((lo + p - 1) // p) * p
        for v in range(start, hi, p):
            j = v - lo
            if p > sig[j] + 1:
                ok[j] = False
            pp = 1
            while rem[j] % p == 0:
                rem[j] //= p
                pp *= p
            sig[j] *= (pp * p - 1) // (p - 1)
    for j in range(m):
        r = rem[j]
        if r > 1 and r > sig[j] + 1:
            ok[j] = False
    return ok


def _practical_mask_numpy(lo, hi, primes):
    m = hi - lo
    rem = np.arange(lo, hi, dtype=np.int64)
    sig = np.ones(m, dtype=np.int64)
    ok = np.ones(m, dtype=np.bool_)
    for p in primes.tolist():
        start = ((lo + p - 1) // p) * p
        idx = np.arange(start - lo, m, p)
        if idx.size == 0:
            continue
        ok[idx[p > sig[idx] + 1]] = False
        r = rem[idx]
        pp = np.ones(idx.size, dtype=np.int64)
        div = r % p == 0
        while div.any():
            r[div] //= p
            pp[div] *= p
            div = r % p == 0
        rem[idx] = r
        sig[idx] *= (pp * p - 1) // (p - 1)
    left = rem > 1
    ok[left & (rem > sig + 1)] = False
    return ok


if HAVE_NUMBA:
    from numba import njit

    _min_coins_dp_numba = njit(cache=True)(_min_coins_dp_loop)
    _practical_mask_numba = njit(cache=True)(_practical_mask_loop)
else:
    _min_coins_dp_numba = None
    _practical_mask_numba = None


def min_coins_table(coins, x: int) -> np.ndarray:
    """dp[i] = fewest coins from `coins` summing to i, for i in 0..x.

    Unreachable amounts hold the marker value x+1 (cannot happen when
    1 is a coin, but prefix experiments may omit it).
    """
    if x >= _INT64_SAFE:
        raise OverflowError("DP amount exceeds int64 kernel range")
    coins = np.asarray([c for c in coins if c <= x], dtype=np.int64)
    if _min_coins_dp_numba is not None:
        return _min_coins_dp_numba(coins, x)
    return _min_coins_dp_numpy(coins, x)


def practical_mask(lo: int, hi: int, primes=None) -> np.ndarray:
    """Boolean mask over [lo, hi): True where the integer is practical."""
    if not 1 <= lo < hi:
        raise ValueError("need 1 <= lo < hi")
    if hi >= _INT64_SAFE:
        raise OverflowError("sieve segment exceeds int64 kernel range")
    if primes is None:
        primes = primes_upto(math.isqrt(hi - 1))
    primes = np.asarray(primes, dtype=np.int64)
    if _practical_mask_numba is not None:
        return _practical_mask_numba(lo, hi, primes)
    return _practical_mask_numpy(lo, hi, primes)
