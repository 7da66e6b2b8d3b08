"""Deterministic compensated accumulation."""

import math


class NeumaierSum:
    """Running Kahan-Babuska (Neumaier) sum.

    Terms are folded in strictly in the order given, so the result is
    reproducible bit for bit on one platform.
    """

    __slots__ = ("_sum", "_comp")

    def __init__(self):
        self._sum = 0.0
        self._comp = 0.0

    def add(self, x):
        s = self._sum
        t = s + x
        if abs(s) >= abs(x):
            self._comp += (s - t) + x
        else:
            self._comp += (x - t) + s
        self._sum = t

    @property
    def value(self):
        return self._sum + self._comp


def compensated_sum(terms):
    acc = NeumaierSum()
    for x in terms:
        acc.add(x)
    return acc.value


def prefix_sums(terms):
    """Yield the compensated partial sums of ``terms``."""
    acc = NeumaierSum()
    for x in terms:
        acc.add(x)
        yield acc.value


def is_nonpositive_integer(x):
    return x <= 0 and float(x).is_integer()


def ulp(x):
    return math.ulp(abs(x))
