"""Integer partitions and the cell statistics used throughout the package."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from fractions import Fraction
from math import factorial

from .errors import CellOutOfDiagram, LengthExceedsN, SizeMismatch


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction.  ``part(i)`` is 1-based and
    returns 0 past the last part.
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and p > parts[i - 1]:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        text = text.strip().strip("()[]")
        if text in ("", "0", "-"):
            return cls()
        return cls(int(p) for p in text.split(","))

    def __str__(self):
        return ",".join(map(str, self))

    def __repr__(self):
        return f"Partition({list(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        return self[i - 1] if 1 <= i <= len(self) else 0

    def multiplicities(self) -> Counter:
        return Counter(self)

    def cells(self):
        """Cells (i, j) of the diagram, row by row, 1-based."""
        return [(i, j) for i, row in enumerate(self, 1) for j in range(1, row + 1)]

    def conjugate(self) -> Partition:
        return conjugate(self)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def content(cell, alpha):
    """alpha*(j-1) - (i-1)."""
    i, j = cell
    return alpha * (j - 1) - (i - 1)


def cell_stats(lam: Partition, cell, alpha):
    """(arm, leg, content) of a cell of the diagram of lam."""
    i, j = cell
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise CellOutOfDiagram(f"{cell} is not a cell of {lam}")
    conj = conjugate(lam)
    return lam[i - 1] - j, conj[j - 1] - i, content(cell, alpha)


def hook_products(lam: Partition, alpha):
    """(h, h') with h = prod(alpha*arm + leg + 1), h' = prod(alpha*arm + leg + alpha)."""
    conj = conjugate(lam)
    h, hp = Fraction(1), Fraction(1)
    for i, j in lam.cells():
        arm, leg = lam[i - 1] - j, conj[j - 1] - i
        h = h * (alpha * arm + leg + 1)
        hp = hp * (alpha * arm + leg + alpha)
    return h, hp


def z_of(lam: Partition) -> int:
    z = 1
    for part, mult in Counter(lam).items():
        z *= factorial(mult) * part ** mult
    return z


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """mu <= lam in dominance order (equal sizes required)."""
    if sum(mu) != sum(lam):
        raise SizeMismatch(f"|{mu}| != |{lam}|")
    a = b = 0
    for r in range(max(len(mu), len(lam))):
        a += mu[r] if r < len(mu) else 0
        b += lam[r] if r < len(lam) else 0
        if a > b:
            return False
    return True


def hat_partition(lam: Partition, n: int) -> Partition:
    """Complement of lam in the n x lam_1 rectangle: hat_i = lam_1 - lam_{n-i+1}."""
    if len(lam) > n:
        raise LengthExceedsN(f"l({lam}) = {len(lam)} > n = {n}")
    if not lam:
        return Partition()
    first = lam[0]
    return Partition(first - lam.part(n - i + 1) for i in range(1, n + 1))


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """All partitions of n in reverse lexicographic order, (n) first and (1^n) last."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(remaining, cap), 0, -1):
            rec(remaining - p, p, prefix + (p,))

    rec(n, n, ())
    return tuple(out)


def partitions_up_to(n: int):
    return [lam for k in range(n + 1) for lam in partitions_of(k)]
