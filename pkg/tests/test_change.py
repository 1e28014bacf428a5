import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from agg2048 import (ResourceLimitError, UNBOUNDED, builtin_sequence,
                     from_integers, ggg_scan_oracle, ggg_stream, greedy_count,
                     greedy_representation, is_unbounded, min_coins,
                     one_shot_test)
from agg2048.change import ggg_scan_table


US_NO_NICKEL = [1, 10, 25]


def test_greedy_representation_examples():
    rep = greedy_representation(30, from_integers(US_NO_NICKEL))
    assert sorted(rep.coins) == [1, 1, 1, 1, 1, 25]
    assert rep.count == 6

    rep = greedy_representation(13, builtin_sequence("twocoin"))
    assert rep.coins == (10, 2, 1)

    assert greedy_representation(0, builtin_sequence("pow2")).coins == ()
    assert greedy_representation(16, builtin_sequence("pow2")).coins == (16,)


def test_greedy_count_examples():
    assert greedy_count(30, from_integers(US_NO_NICKEL)) == 6
    assert greedy_representation(7, builtin_sequence("pow2")).coins == (4, 2, 1)
    assert greedy_count(7, builtin_sequence("pow2")) == 3
    assert greedy_count(0, builtin_sequence("pow2")) == 0


def test_greedy_rejects_negative():
    with pytest.raises(ValueError):
        greedy_count(-1, builtin_sequence("pow2"))


@settings(max_examples=50, deadline=None)
@given(x=st.integers(min_value=0, max_value=5000),
       name=st.sampled_from(["pow2", "fib", "twocoin", "primes1", "practical"]))
def test_greedy_representation_sums_and_uses_members(x, name):
    seq = builtin_sequence(name)
    idx = seq.members()
    rep = greedy_representation(x, builtin_sequence(name))
    assert sum(rep.coins) == x
    assert all(idx.contains(c) for c in set(rep.coins))
    # greedy property: each coin is the largest member not exceeding what
    # is left when it is chosen
    rem = x
    for c in rep.coins:
        assert c == idx.largest_leq(rem)
        rem -= c


# --- minimum coins -------------------------------------------------------

def brute_force_min_coins(x, coins):
    # independent oracle: breadth-first over coin counts
    if x == 0:
        return 0
    frontier = {0}
    for k in itertools.count(1):
        frontier = {s + c for s in frontier for c in coins if s + c <= x}
        if x in frontier:
            return k
        if not frontier:
            return None


def test_min_coins_examples():
    assert min_coins(30, US_NO_NICKEL) == 3
    assert min_coins(13, [1, 2, 4, 5, 8, 10]) == 2
    assert min_coins(0, [1]) == 0


def test_min_coins_cap():
    with pytest.raises(ResourceLimitError):
        min_coins(101, [1, 2], cap=100)


def test_min_coins_unreachable():
    with pytest.raises(ValueError, match="no representation"):
        min_coins(3, [2])


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_min_coins_matches_brute_force(data):
    coins = sorted(data.draw(st.sets(st.integers(min_value=1, max_value=30),
                                     min_size=1, max_size=5)))
    x = data.draw(st.integers(min_value=0, max_value=60))
    expected = brute_force_min_coins(x, coins)
    if expected is None:
        with pytest.raises(ValueError):
            min_coins(x, coins)
    else:
        assert min_coins(x, coins) == expected


# --- one-shot test -------------------------------------------------------

def test_one_shot_pow2_uses_one_coin():
    result = one_shot_test(builtin_sequence("pow2"), 20)
    assert result.all_pass and not result.exhausted
    assert all(r.greedy_coins == 1 for r in result.reports)


def test_one_shot_fib_uses_two_coins():
    result = one_shot_test(builtin_sequence("fib"), 20)
    assert result.all_pass
    # prefix {1,2} has test value 2, a member, so one coin; from length 3
    # on the split 2F(i-1) = F(i) + F(i-3) gives exactly two
    assert all(r.greedy_coins == 2 for r in result.reports if r.prefix_length >= 3)
    assert result.reports[0].greedy_coins == 1


def test_one_shot_failure_on_two_pow_minus_n():
    seq = from_integers([1, 2, 5, 12, 27])
    result = one_shot_test(seq, 20)
    assert result.exhausted and len(result.reports) == 4
    verdicts = [(r.x, r.passed) for r in result.reports]
    assert verdicts == [(2, True), (5, True), (12, True), (27, False)]
    failing = result.reports[-1]
    assert failing.k * failing.y == 36 and failing.greedy_coins == 4


def test_one_shot_failure_no_nickels():
    result = one_shot_test(from_integers(US_NO_NICKEL), 5)
    failing = result.reports[-1]
    assert (failing.x, failing.y, failing.k) == (25, 10, 3)
    assert failing.greedy_coins == 6 and not failing.passed
    assert not result.all_pass


def test_one_shot_rejects_bad_prefix_count():
    with pytest.raises(ValueError):
        one_shot_test(builtin_sequence("pow2"), 0)


# --- hard-to-change inputs ----------------------------------------------

def take_finite(gen, k):
    out = []
    for v in gen:
        if is_unbounded(v) or len(out) == k:
            break
        out.append(v)
    return out


def test_ggg_stream_prefixes():
    assert take_finite(ggg_stream(builtin_sequence("pow2")), 4) == [1, 3, 7, 15]
    assert take_finite(ggg_stream(builtin_sequence("fib")), 5) == [1, 4, 12, 33, 88]
    assert take_finite(ggg_stream(builtin_sequence("primes1")), 4) == [1, 4, 27, 1354]


def test_ggg_stream_naturals_unbounded():
    vals = list(ggg_stream(builtin_sequence("naturals"), scan_cap=10**4))
    assert vals == [1, UNBOUNDED]


def test_ggg_stream_finite_sequence_ends_unbounded():
    vals = list(ggg_stream(from_integers([1, 2, 4, 8])))
    # gaps 1, 2, 4 support three terms, then the list runs out
    assert vals == [1, 3, 7, UNBOUNDED]


def test_ggg_stream_strictly_increasing():
    for name in ("pow2", "fib", "threes", "twocoin", "smooth3"):
        vals = take_finite(ggg_stream(builtin_sequence(name)), 6)
        assert all(a < b for a, b in zip(vals, vals[1:]))


def test_ggg_scan_oracle_examples():
    # greedy counts over pow2 for x=1..7 are 1,1,2,1,2,2,3
    assert ggg_scan_oracle(3, builtin_sequence("pow2"), 100) == 7
    assert ggg_scan_oracle(1, builtin_sequence("fives"), 10) == 1
    assert ggg_scan_oracle(4, builtin_sequence("primes1"), 2000) == 1354
    assert ggg_scan_oracle(5, builtin_sequence("primes1"), 2000) is None


def test_ggg_oracle_aligns_with_stream():
    for name in ("pow2", "fib", "threes", "twocoin", "primes1", "practical"):
        stream = take_finite(ggg_stream(builtin_sequence(name), threshold=10**4), 50)
        assert stream == ggg_scan_table(builtin_sequence(name), 10**4)
        for n, x in enumerate(stream, 1):
            assert ggg_scan_oracle(n, builtin_sequence(name), 10**4) == x


def test_greedy_never_beats_optimal():
    for name in ("pow2", "twocoin", "smooth3"):
        members = builtin_sequence(name).members().values_up_to(1000)
        idx = builtin_sequence(name)
        for x in range(0, 1001, 7):
            assert greedy_count(x, idx.members()) >= min_coins(x, members)


def test_fib_greedy_is_zeckendorf():
    fib = builtin_sequence("fib")
    members = fib.members().values_up_to(10**4)
    positions = {v: i for i, v in enumerate(members)}
    for x in range(1, 10**4 + 1):
        coins = greedy_representation(x, fib.members()).coins
        assert len(set(coins)) == len(coins)  # distinct
        used = sorted(positions[c] for c in coins)
        assert all(b - a >= 2 for a, b in zip(used, used[1:]))  # non-consecutive
