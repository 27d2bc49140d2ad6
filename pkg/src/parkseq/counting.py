"""Counting parking sequences, three routes that must agree.

The closed-form product, the brute-force enumeration oracle over every
preference tuple, and the decomposition recurrence over ordered two-block
splits of the car indices.  Everything runs on exact arbitrary-precision
integers; the product grows too fast for anything else.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import CarSizeVector, SizesLike, _occupancy_template, _parks_into, as_car_sizes

DEFAULT_BUDGET = 10**8
PARTITION_LIMIT = 30


class EnumerationBudgetError(Exception):
    """Raised when the preference space is larger than the enumeration budget."""

    def __init__(self, m: int, n: int, total: int, budget: int):
        super().__init__(
            f"enumerating {total} = {m}^{n} preference tuples exceeds the budget of {budget}"
        )
        self.m = m
        self.n = n
        self.total = total
        self.budget = budget


class IndexSet(tuple):
    """Strictly increasing tuple of positive integers.

    The ground set for decompositions: element order is the original car
    order, so taking a sub-vector through an IndexSet never reorders sizes.
    """

    def __new__(cls, elems: Iterable[int] = ()) -> "IndexSet":
        t = tuple(elems)
        for e in t:
            if not isinstance(e, int) or e < 1:
                raise ValueError(f"index sets hold integers >= 1, got {e!r}")
        for a, b in zip(t, t[1:]):
            if a >= b:
                raise ValueError(f"index set must be strictly increasing, got {t}")
        return super().__new__(cls, t)

    @classmethod
    def of(cls, *elems: int) -> "IndexSet":
        """Build from arbitrary order, deduplicating."""
        return cls(sorted(set(elems)))

    @classmethod
    def first(cls, n: int) -> "IndexSet":
        """The set {1, ..., n}."""
        return cls(range(1, n + 1))


@dataclass(frozen=True)
class CountReport:
    """Two independently computed counts and whether they agree.

    ``enumerated`` is the independent route (brute force, or the
    decomposition sum); ``formula`` is the closed-form product;
    ``tuples_scanned`` is how many candidates the independent route visited.
    """

    enumerated: int
    formula: int
    match: bool
    tuples_scanned: int

    def __post_init__(self) -> None:
        if self.match != (self.enumerated == self.formula):
            raise ValueError("match flag inconsistent with the two counts")

    @classmethod
    def compare(cls, enumerated: int, formula: int, tuples_scanned: int) -> "CountReport":
        return cls(enumerated, formula, enumerated == formula, tuples_scanned)


def _check_z(z: int) -> None:
    if not isinstance(z, int) or z < 1:
        raise ValueError(f"trailer parameter z must be an integer >= 1, got {z!r}")


def count_by_formula(sizes: SizesLike, z: int) -> int:
    """Closed-form number of parking sequences for ``sizes`` behind a trailer.

    The product starts at ``z`` and multiplies, for each proper prefix of the
    size vector, the prefix sum plus the number of cars still to come plus z.
    The last car's size never enters.  The empty fleet counts 1 (empty
    product), not z: that is the value the decomposition recurrence needs.
    """
    cars = as_car_sizes(sizes)
    _check_z(z)
    n = cars.n
    if n == 0:
        return 1
    total = z
    prefix = 0
    for k in range(1, n):
        prefix += cars.sizes[k - 1]
        total *= z + prefix + n - k
    return total


def count_no_trailer(sizes: SizesLike) -> int:
    """Number of parking sequences with no trailer, as its own product.

    Identical to ``count_by_formula(sizes, 1)`` but computed from the
    trailer-free product directly, so the two can be checked against each
    other.
    """
    cars = as_car_sizes(sizes)
    n = cars.n
    total = 1
    prefix = 0
    for k in range(1, n):
        prefix += cars.sizes[k - 1]
        total *= prefix + n - k + 1
    return total


def _count_range(
    sizes: tuple[int, ...], z: int, m: int, firsts: tuple[int, ...]
) -> tuple[int, int]:
    """Count parking sequences whose first preference lies in ``firsts``.

    Returns (parked, scanned).  Odometer order: the last coordinate moves
    fastest.  Runs in a worker process when enumeration is sharded.
    """
    n = len(sizes)
    template = _occupancy_template(z, m)
    occ = bytearray(template)
    parked = 0
    scanned = 0
    rest = [range(1, m + 1)] * (n - 1)
    for prefs in itertools.product(firsts, *rest):
        scanned += 1
        occ[:] = template
        if _parks_into(sizes, prefs, m, occ):
            parked += 1
    return parked, scanned


def _split_evenly(items: tuple[int, ...], k: int) -> list[tuple[int, ...]]:
    q, r = divmod(len(items), k)
    parts = []
    start = 0
    for idx in range(k):
        size = q + (1 if idx < r else 0)
        if size:
            parts.append(items[start : start + size])
        start += size
    return parts


def _enumerate(sizes: tuple[int, ...], z: int, m: int, workers: int) -> tuple[int, int]:
    n = len(sizes)
    if n == 0:
        return 1, 1  # the empty tuple parks
    firsts = tuple(range(1, m + 1))
    if workers <= 1:
        return _count_range(sizes, z, m, firsts)
    parts = _split_evenly(firsts, min(workers, m))
    with ProcessPoolExecutor(max_workers=len(parts)) as pool:
        futures = [pool.submit(_count_range, sizes, z, m, part) for part in parts]
        results = [f.result() for f in futures]
    return sum(r[0] for r in results), sum(r[1] for r in results)


def count_by_enumeration(
    sizes: SizesLike, z: int, *, budget: int | None = DEFAULT_BUDGET, workers: int = 1
) -> int:
    """Brute-force oracle: try every preference tuple in ``[1, m]^n``.

    Visits the full preference space in odometer order and counts the tuples
    under which every car parks.  Refuses to start when ``m**n`` exceeds
    ``budget`` (pass ``budget=None`` to lift the guard).  ``workers > 1``
    shards the space by first preference; each worker owns a disjoint
    sub-range and the shard counts are summed.
    """
    return count_report(sizes, z, budget=budget, workers=workers).enumerated


def count_report(
    sizes: SizesLike, z: int, *, budget: int | None = DEFAULT_BUDGET, workers: int = 1
) -> CountReport:
    """Run the enumeration oracle and compare it with the closed form."""
    cars = as_car_sizes(sizes)
    _check_z(z)
    m = z - 1 + cars.total
    n = cars.n
    total = m**n
    if budget is not None and total > budget:
        raise EnumerationBudgetError(m, n, total, budget)
    parked, scanned = _enumerate(cars.sizes, z, m, workers)
    return CountReport.compare(parked, count_by_formula(cars, z), scanned)


def partitions_into_two(
    ground: IndexSet | Iterable[int],
) -> Iterator[tuple[IndexSet, IndexSet]]:
    """Every ordered pair (left, right) of disjoint sets covering ``ground``.

    Yields exactly ``2**len(ground)`` pairs, in ascending order of the left
    set's characteristic bitmask (bit b set means the b-th smallest element
    belongs to the left set).
    """
    g = ground if isinstance(ground, IndexSet) else IndexSet(ground)
    k = len(g)
    if k > PARTITION_LIMIT:
        raise ValueError(f"refusing to stream 2^{k} decompositions (limit 2^{PARTITION_LIMIT})")
    return _partition_stream(g)


def _partition_stream(g: IndexSet) -> Iterator[tuple[IndexSet, IndexSet]]:
    for mask in range(1 << len(g)):
        left = IndexSet(e for b, e in enumerate(g) if mask >> b & 1)
        right = IndexSet(e for b, e in enumerate(g) if not mask >> b & 1)
        yield left, right


def subvector(sizes: SizesLike, indices: Iterable[int]) -> CarSizeVector:
    """Sizes at the given 1-based indices, in original order (never sorted by size)."""
    cars = as_car_sizes(sizes)
    idxs = indices if isinstance(indices, IndexSet) else IndexSet(indices)
    if idxs and idxs[-1] > cars.n:
        raise ValueError(f"index {idxs[-1]} outside 1..{cars.n}")
    return CarSizeVector(tuple(cars.sizes[i - 1] for i in idxs))


def verify_recurrence(sizes: SizesLike, next_size: int, z: int) -> CountReport:
    """Check the decomposition recurrence for appending one more car.

    The left side is the closed form for ``sizes`` extended by ``next_size``.
    The right side sums, over every ordered split (left, right) of the car
    indices, the closed form for the left block behind the trailer times the
    closed form for the right block with no trailer, weighted by ``z`` plus
    the left block's total size.  ``tuples_scanned`` is the number of splits.
    """
    cars = as_car_sizes(sizes)
    _check_z(z)
    if not isinstance(next_size, int) or next_size < 1:
        raise ValueError(f"next car size must be an integer >= 1, got {next_size!r}")
    rhs = 0
    splits = 0
    for left, right in partitions_into_two(IndexSet.first(cars.n)):
        weight = z + sum(cars.sizes[l - 1] for l in left)
        rhs += weight * count_by_formula(subvector(cars, left), z) * count_by_formula(
            subvector(cars, right), 1
        )
        splits += 1
    lhs = count_by_formula(CarSizeVector(cars.sizes + (next_size,)), z)
    return CountReport.compare(rhs, lhs, splits)
