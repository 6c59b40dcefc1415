"""Integer partitions, compositions and tableaux.

Cells are addressed 1-based as ``(row, column)``. Diagrams are stored in
English order (row 1 is the longest row); the French pictures one usually
draws are the same data flipped upside down.
"""
from __future__ import annotations

from functools import cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

ENUMERATION_CAP = 12


class CapacityError(ValueError):
    """Raised when an exhaustive enumeration would exceed the configured cap."""


class OutOfShapeError(ValueError):
    pass


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Behaves exactly like a tuple (hashing, equality, slicing) so plain tuples
    can be used wherever a partition is looked up.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        self = super().__new__(cls, parts)
        self._size = sum(parts)
        return self

    @property
    def size(self) -> int:
        return self._size

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """λ_i with the convention λ_i = 0 past the last row (1-based)."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield (i, j)

    def __contains__(self, cell) -> bool:  # type: ignore[override]
        i, j = cell
        return 1 <= i <= len(self) and 1 <= j <= self[i - 1]

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


def as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


@cache
def _conjugate(lam: tuple[int, ...]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def conjugate(lam) -> Partition:
    return Partition(_conjugate(tuple(lam)))


def _check_cell(lam: Sequence[int], cell: tuple[int, int]) -> tuple[int, int]:
    i, j = cell
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise OutOfShapeError(f"cell {cell} is not in {tuple(lam)}")
    return i, j


def hook_length(lam, cell: tuple[int, int]) -> int:
    i, j = _check_cell(lam, cell)
    lam_c = _conjugate(tuple(lam))
    return lam[i - 1] + lam_c[j - 1] - i - j + 1


def content(cell: tuple[int, int], lam=None) -> int:
    """Row index minus column index; checked against ``lam`` when given."""
    if lam is not None:
        _check_cell(lam, cell)
    i, j = cell
    return i - j


def hook_lengths(lam) -> list[int]:
    lam = tuple(lam)
    lam_c = _conjugate(lam)
    return [lam[i - 1] + lam_c[j - 1] - i - j + 1
            for i, row in enumerate(lam, start=1) for j in range(1, row + 1)]


def n_statistic(lam) -> int:
    """n(λ) = Σ (i-1) λ_i."""
    return sum(i * p for i, p in enumerate(lam))


@cache
def _dim(lam: tuple[int, ...]) -> int:
    return factorial(sum(lam)) // prod(hook_lengths(lam))


def dim_hook(lam) -> int:
    return _dim(tuple(lam))


def covers(lam) -> list[Partition]:
    """All shapes obtained by adding one box, top row first."""
    lam = tuple(lam)
    out = []
    for i in range(len(lam) + 1):
        row = lam[i] if i < len(lam) else 0
        above = lam[i - 1] if i > 0 else None
        if above is None or above > row:
            new = list(lam)
            if i < len(lam):
                new[i] += 1
            else:
                new.append(1)
            out.append(Partition(new))
    return out


def covered_by(lam) -> list[Partition]:
    """All shapes obtained by removing one corner box."""
    lam = tuple(lam)
    out = []
    for i, row in enumerate(lam):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        if row > below:
            new = list(lam)
            new[i] -= 1
            out.append(Partition(p for p in new if p))
    return out


def _check_cap(n: int, cap: int | None):
    cap = ENUMERATION_CAP if cap is None else cap
    if n > cap:
        raise CapacityError(f"size {n} exceeds the enumeration cap {cap}")


@cache
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in _partitions(n - first, first))
    return tuple(out)


def partitions_of(n: int, cap: int | None = None) -> list[Partition]:
    """Partitions of n in reverse lexicographic order: (n) first, 1^n last."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_cap(n, cap)
    return [Partition(p) for p in _partitions(n, n)]


def partitions_upto(n: int, cap: int | None = None) -> list[Partition]:
    return [lam for m in range(n + 1) for lam in partitions_of(m, cap)]


# ---------------------------------------------------------------- tableaux

class Tableau:
    """A filling of a Young diagram, row by row (English order)."""

    __slots__ = ("rows", "shape")

    def __init__(self, rows: Iterable[Iterable[int]]):
        self.rows = tuple(tuple(r) for r in rows if len(tuple(r)))
        self.shape = Partition(len(r) for r in self.rows)

    def is_semistandard(self) -> bool:
        for r in self.rows:
            if any(a > b for a, b in zip(r, r[1:])):
                return False
        for up, down in zip(self.rows, self.rows[1:]):
            if any(up[j] >= down[j] for j in range(len(down))):
                return False
        return True

    def is_standard(self) -> bool:
        n = self.shape.size
        entries = sorted(x for r in self.rows for x in r)
        if entries != list(range(1, n + 1)):
            return False
        return self.is_semistandard()

    def entries(self) -> list[int]:
        return [x for r in self.rows for x in r]

    def row_of(self) -> dict[int, int]:
        """Map entry -> 1-based row index (standard tableaux)."""
        return {x: i for i, r in enumerate(self.rows, start=1) for x in r}

    def __eq__(self, other) -> bool:
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return "Tableau(" + "/".join("".join(map(str, r)) if max(r) < 10 else
                                     ",".join(map(str, r)) for r in self.rows) + ")"


def enumerate_syt(lam, cap: int | None = None) -> list[Tableau]:
    """Every standard tableau of shape λ, built by placing n, n-1, ... in corners."""
    lam = tuple(lam)
    _check_cap(sum(lam), cap)
    return [Tableau(rows) for rows in _syt(lam)]


@cache
def _syt(lam: tuple[int, ...]) -> tuple:
    n = sum(lam)
    if n == 0:
        return ((),)
    out = []
    for mu in covered_by(lam):
        mu = tuple(mu)
        # the removed corner holds n
        for rows in _syt(mu):
            rows = [list(r) for r in rows]
            i = next(k for k in range(len(lam)) if (mu[k] if k < len(mu) else 0) != lam[k])
            if i < len(rows):
                rows[i].append(n)
            else:
                rows.append([n])
            out.append(tuple(tuple(r) for r in rows))
    return tuple(out)


def tableau_descents(t: Tableau) -> frozenset[int]:
    """i is a descent of a standard tableau when i+1 sits in a lower row (English)."""
    row = t.row_of()
    n = t.shape.size
    return frozenset(i for i in range(1, n) if row[i + 1] > row[i])


# ------------------------------------------------------------ compositions

class Composition(tuple):
    """A tuple of positive integers; size is the sum of the parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive: {parts}")
        self = super().__new__(cls, parts)
        self._size = sum(parts)
        return self

    @property
    def size(self) -> int:
        return self._size

    def __repr__(self) -> str:
        return f"Composition({tuple(self)})"


def descent_set(c) -> frozenset[int]:
    out, acc = [], 0
    for p in tuple(c)[:-1]:
        acc += p
        out.append(acc)
    return frozenset(out)


def descent_composition_of_set(s: Iterable[int], n: int) -> Composition:
    s = sorted(set(s))
    if any(not 1 <= d <= n - 1 for d in s):
        raise ValueError(f"descent set {s} is not inside [1, {n - 1}]")
    if n == 0:
        return Composition(())
    cuts = [0] + s + [n]
    return Composition(b - a for a, b in zip(cuts, cuts[1:]))


composition_of = descent_composition_of_set


def conjugate_composition(c) -> Composition:
    """Descent set [1, n-1] minus the descent set of the reversed composition."""
    c = tuple(c)
    n = sum(c)
    rev = descent_set(c[::-1])
    return descent_composition_of_set(set(range(1, n)) - rev, n)


def restrict(c, start: int, end: int) -> Composition:
    """Cut the ribbon of c to the boxes start..end (1-based, inclusive).

    ``restrict(c, i+1, j)`` has size j-i; an empty window gives the empty
    composition.
    """
    c = tuple(c)
    n = sum(c)
    i = start - 1
    if not (0 <= i <= end <= n):
        raise ValueError(f"bad window [{start}, {end}] for a composition of size {n}")
    d = {x - i for x in descent_set(c) if start <= x <= end - 1}
    return descent_composition_of_set(d, end - i)


def comaj(c) -> int:
    n = sum(c)
    return sum(n - d for d in descent_set(c))


def compositions_of(n: int) -> list[Composition]:
    from itertools import combinations
    out = []
    for k in range(n):
        for s in combinations(range(1, n), k):
            out.append(descent_composition_of_set(s, n))
    return out if n else [Composition(())]
