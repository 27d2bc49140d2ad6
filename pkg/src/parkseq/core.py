"""Domain types and the deterministic parking simulator.

The lot is a row of ``z - 1 + sum(sizes)`` numbered spots (spot numbers are
1-based).  Spots ``1 .. z-1`` hold an immovable trailer; ``z = 1`` means no
trailer.  Cars arrive one at a time in index order; car ``i`` drives to its
preferred spot ``c_i``, rolls forward to the first empty spot ``j >= c_i``,
and parks there iff the whole block ``j .. j + y_i - 1`` exists and is empty.
A preference tuple under which every car parks is a parking sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

TRAILER = 0
Cell = Optional[int]  # None = empty, TRAILER = trailer block, i >= 1 = car i

SizesLike = Union["CarSizeVector", Sequence[int]]
PrefsLike = Union["PreferenceVector", Sequence[int]]


@dataclass(frozen=True)
class CarSizeVector:
    """Ordered car lengths, one positive integer per arriving car."""

    sizes: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "sizes", tuple(self.sizes))
        for y in self.sizes:
            if not isinstance(y, int) or y < 1:
                raise ValueError(f"car sizes must be integers >= 1, got {y!r}")

    @property
    def n(self) -> int:
        return len(self.sizes)

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sizes)

    def __len__(self) -> int:
        return len(self.sizes)


@dataclass(frozen=True)
class TrailerLot:
    """Trailer parameter paired with the fleet it must accommodate.

    The trailer fills spots ``1 .. z-1``; the lot length is always derived
    from ``z`` and the car sizes, never stored.
    """

    z: int
    cars: CarSizeVector

    def __post_init__(self) -> None:
        if not isinstance(self.z, int) or self.z < 1:
            raise ValueError(f"trailer parameter z must be an integer >= 1, got {self.z!r}")

    @property
    def length(self) -> int:
        return self.z - 1 + self.cars.total


@dataclass(frozen=True)
class PreferenceVector:
    """Preferred spots, one per car, in arrival order."""

    prefs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "prefs", tuple(self.prefs))
        for c in self.prefs:
            if not isinstance(c, int) or c < 1:
                raise ValueError(f"preferred spots must be integers >= 1, got {c!r}")

    def validate_for(self, lot: TrailerLot) -> None:
        """Reject tuples that do not pair with the lot.

        A wrong length or a preference past the last spot is malformed input,
        not a failed parking attempt.
        """
        if len(self.prefs) != lot.cars.n:
            raise ValueError(
                f"{len(self.prefs)} preferences given for {lot.cars.n} cars"
            )
        m = lot.length
        for i, c in enumerate(self.prefs, start=1):
            if c > m:
                raise ValueError(f"car {i} prefers spot {c} but the lot ends at spot {m}")

    def __iter__(self) -> Iterator[int]:
        return iter(self.prefs)

    def __len__(self) -> int:
        return len(self.prefs)


@dataclass(frozen=True)
class LotLayout:
    """Cell contents of the lot, one entry per spot (spot k is ``cells[k-1]``)."""

    cells: tuple[Cell, ...]

    def spot(self, k: int) -> Cell:
        """Content of 1-based spot ``k``."""
        if not 1 <= k <= len(self.cells):
            raise IndexError(f"spot {k} outside lot 1..{len(self.cells)}")
        return self.cells[k - 1]

    def render(self) -> str:
        return " ".join(_cell_token(c) for c in self.cells)

    def validate_against(self, cars: CarSizeVector, z: int) -> None:
        """Check the layout invariants for a successful parking of ``cars``.

        Trailer cells are exactly spots 1..z-1, each car occupies a contiguous
        block of its own length, and no cell is empty.
        """
        m = z - 1 + cars.total
        if len(self.cells) != m:
            raise ValueError(f"layout has {len(self.cells)} cells, lot has {m}")
        for k, cell in enumerate(self.cells, start=1):
            if (cell == TRAILER) != (k <= z - 1):
                raise ValueError(f"spot {k} holds {_cell_token(cell)}, trailer zone is 1..{z - 1}")
            if cell is None:
                raise ValueError(f"spot {k} is empty in a finished layout")
        for i, y in enumerate(cars.sizes, start=1):
            block = [k for k, cell in enumerate(self.cells, start=1) if cell == i]
            if len(block) != y:
                raise ValueError(f"car {i} occupies {len(block)} spots, its size is {y}")
            if block and block[-1] - block[0] != y - 1:
                raise ValueError(f"car {i} is not contiguous: spots {block}")


def _cell_token(cell: Cell) -> str:
    if cell == TRAILER:
        return "T"
    if cell is None:
        return "."
    return f"C{cell}"


@dataclass(frozen=True)
class Parked:
    """Every car parked; carries the final layout."""

    layout: LotLayout


@dataclass(frozen=True)
class Collision:
    """The first empty spot was free but the car's block ran into an occupied spot."""

    car: int
    first_empty: int
    blocked_at: int


@dataclass(frozen=True)
class Overflow:
    """The car's block would leave the lot, or no empty spot remains at or
    after its preference (``first_empty`` is None in that case)."""

    car: int
    first_empty: int | None


ParkingOutcome = Union[Parked, Collision, Overflow]


def as_car_sizes(value: SizesLike) -> CarSizeVector:
    return value if isinstance(value, CarSizeVector) else CarSizeVector(tuple(value))


def as_preferences(value: PrefsLike) -> PreferenceVector:
    return value if isinstance(value, PreferenceVector) else PreferenceVector(tuple(value))


def simulate_parking(sizes: SizesLike, z: int, prefs: PrefsLike) -> ParkingOutcome:
    """Park every car by the greedy rule and report how the attempt ended.

    Cars are processed in order 1..n.  Car ``i`` takes the minimal empty spot
    ``j >= c_i`` and parks in ``j .. j + y_i - 1`` iff all those spots exist
    and are empty.  The first failure is returned as ``Collision`` or
    ``Overflow``; malformed input raises ``ValueError`` instead.
    """
    cars = as_car_sizes(sizes)
    lot = TrailerLot(z, cars)
    pv = as_preferences(prefs)
    pv.validate_for(lot)

    m = lot.length
    cells: list[Cell] = [None] * (m + 1)  # 1-based; cells[0] unused
    for k in range(1, z):
        cells[k] = TRAILER
    for i, (y, c) in enumerate(zip(cars.sizes, pv.prefs), start=1):
        j = c
        while j <= m and cells[j] is not None:
            j += 1
        if j > m:
            return Overflow(car=i, first_empty=None)
        if j + y - 1 > m:
            return Overflow(car=i, first_empty=j)
        for k in range(j + 1, j + y):
            if cells[k] is not None:
                return Collision(car=i, first_empty=j, blocked_at=k)
        for k in range(j, j + y):
            cells[k] = i
    return Parked(LotLayout(tuple(cells[1:])))


def is_parking_sequence(sizes: SizesLike, z: int, prefs: PrefsLike) -> bool:
    """True iff the attempt returns ``Parked``."""
    return isinstance(simulate_parking(sizes, z, prefs), Parked)


def _occupancy_template(z: int, m: int) -> bytearray:
    """Occupancy row for `_parks_into`: spot k is ``occ[k]``, ``occ[0]`` is a
    permanently occupied sentinel so byte searches never land on it."""
    occ = bytearray(m + 1)
    occ[0] = 1
    for k in range(1, z):
        occ[k] = 1
    return occ

def _parks_into(sizes: Sequence[int], prefs: Sequence[int], m: int, occ: bytearray) -> bool:
    """Greedy rule on a scratch occupancy row, success/failure only.

    ``occ`` must be a fresh copy of an `_occupancy_template` row; it is
    consumed by the call.  This is the enumeration hot path: same semantics
    as `simulate_parking`, no outcome objects.
    """
    for y, c in zip(sizes, prefs):
        j = occ.find(0, c)
        if j < 0:
            return False
        end = j + y
        if end > m + 1:
            return False
        if y > 1 and occ.find(1, j + 1, end) >= 0:
            return False
        for k in range(j, end):
            occ[k] = 1
    return True
