"""Known maximum-total prefixes for the builtin sequences.

These are the published OEIS values of the total-score bound per cell
count (A000225 for pow2 tiles, A027941 for fib, A002450 for threes,
A052549 for fives, A000325 for mersenne tiles, A296840 for smooth3,
A302757 for twocoin, A066352 for primes1); the practical prefix is not
in the OEIS.  Used by the golden verification suite and regression
tests.
"""

GOLDEN_TOTALS: dict[str, list[int]] = {
    "pow2": [2**n - 1 for n in range(1, 11)],
    "fib": [1, 4, 12, 33, 88],
    "threes": [1, 5, 21, 85, 341],
    "fives": [1, 4, 9, 19, 39, 79],
    "mersenne": [1, 2, 5, 12, 27],
    "smooth3": [1, 5, 23, 185, 1721, 15545, 277689],
    "twocoin": [1, 3, 13, 55, 225, 907, 3637],
    "practical": [1, 3, 11, 191],
    "primes1": [1, 4, 27, 1354],
}
