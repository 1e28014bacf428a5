"""The Unbounded sentinel.

Used when no large-enough gap exists in a value sequence within the scan
cap (or the sequence ran out), meaning the corresponding game never
terminates for that cell count.  It compares greater than every integer;
arithmetic on it is a bug and raises.
"""

from __future__ import annotations


class _Unbounded:
    __slots__ = ()

    def __repr__(self):
        return "UNBOUNDED"

    def __str__(self):
        return "UNBOUNDED"

    def __eq__(self, other):
        return isinstance(other, _Unbounded)

    def __hash__(self):
        return hash("agg2048.UNBOUNDED")

    # ordering: UNBOUNDED is greater than every integer and equal to itself
    def __gt__(self, other):
        if isinstance(other, _Unbounded):
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, (_Unbounded, int)):
            return True
        return NotImplemented

    def __lt__(self, other):
        return False if isinstance(other, (_Unbounded, int)) else NotImplemented

    def __le__(self, other):
        if isinstance(other, _Unbounded):
            return True
        if isinstance(other, int):
            return False
        return NotImplemented

    def _no_arith(self, *args):
        raise TypeError("arithmetic with UNBOUNDED is not allowed")

    __add__ = __radd__ = __sub__ = __rsub__ = _no_arith
    __mul__ = __rmul__ = __floordiv__ = __rfloordiv__ = _no_arith


UNBOUNDED = _Unbounded()


def is_unbounded(x) -> bool:
    return isinstance(x, _Unbounded)
