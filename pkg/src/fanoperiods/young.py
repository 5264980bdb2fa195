"""Young diagrams bounded by a rectangle, lattice-path step sets, and the
diagonal statistic driving Grassmannian valuations.

Conventions.  A context (k, n) bounds diagrams inside a box with n - k
rows of length at most k.  A diagram is identified with the monotone
lattice path cutting its southeast border, read from the northeast
corner of the box: n steps total, k of them west and n - k south,
indexed 1..n.  Cells are (row, column), 1-indexed, top-left justified.
The statistic `max_diag` counts cells of a set difference lying on a
single northwest-to-southeast diagonal (constant column - row); on
these diagonals the boundary-rectangle variations below change the
count by exactly one cell, which is what the valuation identities need.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence, Union

Cell = tuple[int, int]


@dataclass(frozen=True)
class BoxContext:
    """Diagrams with at most n - k rows of length at most k."""

    k: int
    n: int

    def __post_init__(self):
        if not 0 < self.k < self.n:
            raise ValueError(f"need 0 < k < n, got k={self.k}, n={self.n}")

    @property
    def box_rows(self) -> int:
        return self.n - self.k

    @property
    def box_cols(self) -> int:
        return self.k

    def transposed(self) -> BoxContext:
        return BoxContext(self.n - self.k, self.n)


@dataclass(frozen=True)
class YoungDiagram:
    context: BoxContext
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        while rows and rows[-1] == 0:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"rows not weakly decreasing: {rows!r}")
        if rows and (rows[0] > self.context.box_cols or any(r < 0 for r in rows)):
            raise ValueError(f"rows {rows!r} leave the {self.context} box")
        if len(rows) > self.context.box_rows:
            raise ValueError(f"too many rows for the {self.context} box: {rows!r}")

    @classmethod
    def of(cls, context: BoxContext, rows: Iterable[int]) -> YoungDiagram:
        return cls(context, tuple(rows))

    @classmethod
    def full_box(cls, context: BoxContext) -> YoungDiagram:
        return cls(context, (context.box_cols,) * context.box_rows)

    def padded_rows(self) -> tuple[int, ...]:
        pad = self.context.box_rows - len(self.rows)
        return self.rows + (0,) * pad

    def cells(self) -> set[Cell]:
        return {(i, j) for i, r in enumerate(self.rows, 1) for j in range(1, r + 1)}

    def size(self) -> int:
        return sum(self.rows)

    def is_rectangle(self) -> bool:
        return not self.rows or all(r == self.rows[0] for r in self.rows)


@dataclass(frozen=True)
class StepSet:
    """The positions of the south (or west) steps of a border path."""

    context: BoxContext
    direction: str
    steps: frozenset[int]

    def __post_init__(self):
        if self.direction not in ("south", "west"):
            raise ValueError(f"unknown direction {self.direction!r}")
        object.__setattr__(self, "steps", frozenset(int(s) for s in self.steps))
        n = self.context.n
        if not self.steps <= set(range(1, n + 1)):
            raise ValueError(f"steps {sorted(self.steps)!r} outside 1..{n}")
        expected = self.context.box_rows if self.direction == "south" else self.context.k
        if len(self.steps) != expected:
            raise ValueError(
                f"a {self.direction} step set in {self.context} needs "
                f"{expected} members, got {len(self.steps)}"
            )


def to_steps(diagram: YoungDiagram, direction: str) -> StepSet:
    """Step positions of the diagram's border path.

    Row i of the (zero-padded) diagram contributes the south step at
    position i + k - rows[i]; west steps fill the complement.
    """
    ctx = diagram.context
    south = frozenset(
        i + ctx.k - r for i, r in enumerate(diagram.padded_rows(), 1)
    )
    if direction == "south":
        return StepSet(ctx, "south", south)
    if direction == "west":
        return StepSet(ctx, "west", frozenset(range(1, ctx.n + 1)) - south)
    raise ValueError(f"unknown direction {direction!r}")


def from_steps(steps: StepSet) -> YoungDiagram:
    """Inverse of `to_steps`; direction conversion goes through complements."""
    ctx = steps.context
    if steps.direction == "west":
        south = sorted(set(range(1, ctx.n + 1)) - steps.steps)
    else:
        south = sorted(steps.steps)
    rows = tuple(i + ctx.k - s for i, s in enumerate(south, 1))
    return YoungDiagram(ctx, rows)


def _cyclic_label(value: int, n: int) -> int:
    """Reduce to 1..n (the representative n, never 0)."""
    return (value - 1) % n + 1


def boundary_rectangle(index: int, ctx: BoxContext) -> YoungDiagram:
    """The i-th frozen rectangle: west steps on the cyclic interval
    [i+1, i+k]."""
    if not 0 <= index < ctx.n:
        raise ValueError(f"boundary index {index} outside 0..{ctx.n - 1}")
    west = frozenset(
        _cyclic_label(index + t, ctx.n) for t in range(1, ctx.k + 1)
    )
    return from_steps(StepSet(ctx, "west", west))


def boundary_rectangle_box(index: int, ctx: BoxContext) -> YoungDiagram:
    """The one-box variation of the i-th frozen rectangle: west steps on
    [i+1, i+k-1] plus the single step i+k+1."""
    if not 0 <= index < ctx.n:
        raise ValueError(f"boundary index {index} outside 0..{ctx.n - 1}")
    west = {
        _cyclic_label(index + t, ctx.n) for t in range(1, ctx.k)
    }
    west.add(_cyclic_label(index + ctx.k + 1, ctx.n))
    return from_steps(StepSet(ctx, "west", frozenset(west)))


def max_diag(diagram: YoungDiagram, removed: YoungDiagram) -> int:
    """Largest number of cells of cells(diagram) - cells(removed) on one
    northwest-to-southeast diagonal (constant column - row)."""
    difference = diagram.cells() - removed.cells()
    if not difference:
        return 0
    tallies: dict[int, int] = {}
    for i, j in difference:
        tallies[j - i] = tallies.get(j - i, 0) + 1
    return max(tallies.values())


def sigma_reflect(diagram: YoungDiagram) -> YoungDiagram:
    """Reflection into the transposed box: south steps become west steps."""
    south = to_steps(diagram, "south").steps
    ctx_t = diagram.context.transposed()
    return from_steps(StepSet(ctx_t, "west", south))


def valuation_vector(
    diagram: YoungDiagram, seed: Sequence[YoungDiagram]
) -> tuple[int, ...]:
    """The diagonal statistic of `diagram` against each seed diagram in order."""
    return tuple(max_diag(diagram, mu) for mu in seed)


def theta_valuation_delta(i: int, j: int, ctx: BoxContext) -> int:
    """max_diag difference between the one-box variation and the frozen
    rectangle at boundary index i, measured against rectangle j.

    Equals delta_{ij} - delta_{i, n-k} (checked exhaustively in the
    acceptance suite)."""
    mu_j = boundary_rectangle(j, ctx)
    return max_diag(boundary_rectangle_box(i, ctx), mu_j) - max_diag(
        boundary_rectangle(i, ctx), mu_j
    )


def all_diagrams(ctx: BoxContext) -> list[YoungDiagram]:
    """Every diagram in the box, ordered by west-step set."""
    return [
        from_steps(StepSet(ctx, "west", frozenset(members)))
        for members in combinations(range(1, ctx.n + 1), ctx.k)
    ]


def schur_dimension(shape: Union[YoungDiagram, Sequence[int]], n: int) -> int:
    """Dimension of the Schur module of the given shape for GL(n), by the
    hook content formula."""
    rows = tuple(shape.rows if isinstance(shape, YoungDiagram) else shape)
    rows = tuple(int(r) for r in rows)
    while rows and rows[-1] == 0:
        rows = rows[:-1]
    if any(a < b for a, b in zip(rows, rows[1:])) or any(r < 0 for r in rows):
        raise ValueError(f"not a partition: {rows!r}")
    if len(rows) > n:
        raise ValueError(f"shape {rows!r} has more than {n} rows")
    if not rows:
        return 1
    conjugate = [sum(1 for r in rows if r >= j) for j in range(1, rows[0] + 1)]
    value = Fraction(1)
    for i, r in enumerate(rows, 1):
        for j in range(1, r + 1):
            hook = (r - j) + (conjugate[j - 1] - i) + 1
            value *= Fraction(n + j - i, hook)
    if value.denominator != 1:
        raise ArithmeticError(f"hook content formula gave a non-integer: {value}")
    return int(value)


# ---------------------------------------------------------------------------
# JSON: {"k": 2, "n": 4, "rows": [2, 1]} and {"direction": "west", "steps": [1, 3]}


def diagram_to_json(diagram: YoungDiagram) -> dict:
    return {
        "k": diagram.context.k,
        "n": diagram.context.n,
        "rows": list(diagram.rows),
    }


def diagram_from_json(data: Mapping) -> YoungDiagram:
    if not isinstance(data, Mapping):
        raise ValueError("diagram JSON must be an object")
    k, n, rows = data.get("k"), data.get("n"), data.get("rows")
    if not isinstance(k, int) or not isinstance(n, int):
        raise ValueError('diagram JSON needs integer "k" and "n"')
    if not isinstance(rows, (list, tuple)) or not all(
        isinstance(r, int) and not isinstance(r, bool) for r in rows
    ):
        raise ValueError(f'bad "rows" {rows!r}')
    return YoungDiagram(BoxContext(k, n), tuple(rows))


def steps_to_json(steps: StepSet) -> dict:
    return {"direction": steps.direction, "steps": sorted(steps.steps)}


def steps_from_json(data: Mapping, ctx: BoxContext) -> StepSet:
    if not isinstance(data, Mapping):
        raise ValueError("steps JSON must be an object")
    direction = data.get("direction")
    members = data.get("steps")
    if not isinstance(members, (list, tuple)) or not all(
        isinstance(s, int) and not isinstance(s, bool) for s in members
    ):
        raise ValueError(f'bad "steps" {members!r}')
    return StepSet(ctx, direction, frozenset(members))
