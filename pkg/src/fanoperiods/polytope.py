"""Rational polytopes given by halfspaces, with exact vertex enumeration.

A halfspace is {v : <normal, v> >= offset} with an integer normal and a
rational offset.  Vertex enumeration solves every dimension-sized facet
subsystem exactly and keeps the feasible solutions, which is fine at the
dimensions this package meets (at most 8).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Mapping, NamedTuple, Sequence

from fanoperiods.laurent import _as_fraction

_MAX_ENUMERATION_DIM = 8


class UnboundedPolytopeError(ValueError):
    """Raised when a count requires a bounded polytope and none is given."""


@dataclass(frozen=True)
class Halfspace:
    """The set {v : <normal, v> >= offset}."""

    normal: tuple[int, ...]
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "normal", tuple(self.normal))
        object.__setattr__(self, "offset", _as_fraction(self.offset))

    def holds_at(self, point: Sequence[Fraction], scale: int = 1) -> bool:
        value = sum(
            (Fraction(a) * x for a, x in zip(self.normal, point)), Fraction(0)
        )
        return value >= self.offset * scale

    def active_at(self, point: Sequence[Fraction]) -> bool:
        value = sum(
            (Fraction(a) * x for a, x in zip(self.normal, point)), Fraction(0)
        )
        return value == self.offset


@dataclass(frozen=True)
class HalfspaceSystem:
    """A finite intersection of halfspaces in a fixed dimension."""

    dim: int
    facets: tuple[Halfspace, ...]

    def __post_init__(self):
        object.__setattr__(self, "facets", tuple(self.facets))
        for facet in self.facets:
            if len(facet.normal) != self.dim:
                raise ValueError(
                    f"facet normal {facet.normal!r} does not match dimension {self.dim}"
                )
            if not any(facet.normal):
                raise ValueError("facet normals must be nonzero")

    def contains(self, point: Sequence[Fraction], scale: int = 1) -> bool:
        return all(f.holds_at(point, scale) for f in self.facets)


def polar_from_support(exponents: Iterable[Sequence[int]]) -> HalfspaceSystem:
    """Polar polytope {v : <e, v> >= -1 for every support vector e}.

    Zero vectors impose no condition and are dropped; an empty (or
    all-zero) support has no polar polytope and raises.
    """
    normals: set[tuple[int, ...]] = set()
    dim: int | None = None
    for e in exponents:
        vec = tuple(int(c) for c in e)
        if dim is None:
            dim = len(vec)
        elif len(vec) != dim:
            raise ValueError("support vectors of mixed dimension")
        if any(vec):
            normals.add(vec)
    if dim is None or not normals:
        raise ValueError("polar of an empty support is undefined")
    return HalfspaceSystem(
        dim, tuple(Halfspace(n, Fraction(-1)) for n in sorted(normals))
    )


# ---------------------------------------------------------------------------
# exact linear algebra on Fractions


def _solve_square(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
    """Solve a square system exactly; None if the matrix is singular."""
    n = len(rows)
    a = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = a[col][col]
        a[col] = [x / inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return tuple(a[i][n] for i in range(n))


def _rank_and_kernel_vector(rows: Sequence[Sequence[Fraction]], dim: int):
    """Row-reduce; return (rank, one kernel vector or None)."""
    a = [list(row) for row in rows]
    pivots: list[int] = []
    row = 0
    for col in range(dim):
        pivot = next((r for r in range(row, len(a)) if a[r][col]), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        inv = a[row][col]
        a[row] = [x / inv for x in a[row]]
        for r in range(len(a)):
            if r != row and a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
        if row == len(a):
            break
    rank = len(pivots)
    if rank == dim:
        return rank, None
    free = next(c for c in range(dim) if c not in pivots)
    vector = [Fraction(0)] * dim
    vector[free] = Fraction(1)
    for r, col in enumerate(pivots):
        vector[col] = -a[r][free]
    return rank, tuple(vector)


def vertices(system: HalfspaceSystem) -> list[tuple[Fraction, ...]]:
    """All basic feasible solutions, each listed once, sorted."""
    if system.dim > _MAX_ENUMERATION_DIM:
        raise ValueError(
            f"vertex enumeration is capped at dimension {_MAX_ENUMERATION_DIM}"
        )
    found: set[tuple[Fraction, ...]] = set()
    for subset in combinations(system.facets, system.dim):
        rows = [[Fraction(c) for c in f.normal] for f in subset]
        rhs = [f.offset for f in subset]
        point = _solve_square(rows, rhs)
        if point is not None and system.contains(point):
            found.add(point)
    return sorted(found)


def _has_recession_ray(system: HalfspaceSystem) -> bool:
    normals = [[Fraction(c) for c in f.normal] for f in system.facets]
    rank, kernel = _rank_and_kernel_vector(normals, system.dim)
    if rank < system.dim:
        return True  # a whole line survives in the recession cone
    distinct = sorted({f.normal for f in system.facets})
    for subset in combinations(distinct, system.dim - 1):
        rows = [[Fraction(c) for c in n] for n in subset]
        sub_rank, direction = _rank_and_kernel_vector(rows, system.dim)
        if sub_rank != system.dim - 1 or direction is None:
            continue
        for ray in (direction, tuple(-c for c in direction)):
            if all(
                sum((Fraction(a) * r for a, r in zip(f.normal, ray)), Fraction(0)) >= 0
                for f in system.facets
            ):
                return True
    return False


class GeometryFlags(NamedTuple):
    bounded: bool
    full_dimensional: bool
    origin_interior: bool


def geometry_flags(system: HalfspaceSystem) -> GeometryFlags:
    """Boundedness, full-dimensionality of the vertex hull, origin strictly inside."""
    bounded = not _has_recession_ray(system)
    vs = vertices(system)
    if len(vs) < 2:
        full_dimensional = False
    else:
        base = vs[0]
        rows = [
            [x - b for x, b in zip(v, base)]
            for v in vs[1:]
        ]
        rank, _ = _rank_and_kernel_vector(rows, system.dim)
        full_dimensional = rank == system.dim
    origin_interior = all(f.offset < 0 for f in system.facets)
    return GeometryFlags(bounded, full_dimensional, origin_interior)


def lattice_point_count(system: HalfspaceSystem, dilation: int) -> int:
    """Number of integer vectors v with <a, v> >= dilation * offset for all facets.

    Dilation scales offsets only; the enumeration walks the integer
    bounding box of the dilated vertex set.
    """
    if dilation < 0:
        raise ValueError("dilation must be non-negative")
    if _has_recession_ray(system):
        raise UnboundedPolytopeError("lattice counts require a bounded polytope")
    vs = vertices(system)
    if not vs:
        return 0
    lo = [
        math.ceil(min(v[i] for v in vs) * dilation) for i in range(system.dim)
    ]
    hi = [
        math.floor(max(v[i] for v in vs) * dilation) for i in range(system.dim)
    ]
    count = 0
    for candidate in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        point = tuple(Fraction(c) for c in candidate)
        if system.contains(point, scale=dilation):
            count += 1
    return count


# ---------------------------------------------------------------------------
# JSON document
#
# {"dim": 2,
#  "facets": [{"normal": [1, 0], "offset": "-1"}, ...],
#  "vertices": [["-1", "-1"], ...],
#  "lattice_counts": {"1": 10, "2": 28}}


def build_document(
    system: HalfspaceSystem, dilations: Sequence[int] = ()
) -> dict:
    vs = vertices(system)
    counts: dict[str, int] = {}
    if dilations:
        bounded = not _has_recession_ray(system)
        if bounded:
            for r in sorted(set(dilations)):
                counts[str(r)] = lattice_point_count(system, r)
    return {
        "dim": system.dim,
        "facets": [
            {"normal": list(f.normal), "offset": str(f.offset)}
            for f in sorted(system.facets, key=lambda f: (f.normal, f.offset))
        ],
        "vertices": [[str(c) for c in v] for v in vs],
        "lattice_counts": counts,
    }


def parse_document(data: Mapping):
    """Parse a polytope document back into (system, vertices, counts)."""
    if not isinstance(data, Mapping):
        raise ValueError("polytope JSON must be an object")
    dim = data.get("dim")
    if not isinstance(dim, int) or dim <= 0:
        raise ValueError(f'bad "dim" {dim!r}')
    facets = []
    for record in data.get("facets", []):
        normal = record.get("normal")
        if (
            not isinstance(normal, (list, tuple))
            or len(normal) != dim
            or not all(isinstance(c, int) for c in normal)
        ):
            raise ValueError(f"bad facet normal {normal!r}")
        facets.append(Halfspace(tuple(normal), Fraction(str(record.get("offset")))))
    system = HalfspaceSystem(dim, tuple(facets))
    parsed_vertices = [
        tuple(Fraction(c) for c in v) for v in data.get("vertices", [])
    ]
    counts = {
        int(r): int(c) for r, c in (data.get("lattice_counts") or {}).items()
    }
    return system, parsed_vertices, counts
