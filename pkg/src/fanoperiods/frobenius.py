"""Theta-series reconstruction from regularized period sequences.

A period sequence c_0, c_1, ... determines a Laurent series
N_1 = t + sum_i a_i t^(-i) through the residue conditions
N_1^d[t^0] = c_d; the recursion theta_n = theta_1 theta_{n-1} - lower
terms then builds the whole ladder N_2, N_3, ... together with the
multiplication table of the theta basis.  All series are truncated
honestly: every value carries the largest tail index it trusts, and
operations refuse to emit coefficients outside the joint window rather
than zero-filling.

Tail coefficients satisfy a_i = i * N_{p,i}; the quotient N_{p,i} is
exposed as `two_point` and feeds both the one-step constants
N_{1,q}^r = (q-r) N_{1,q-r} and the general table entry
[p-r] N_{q,p-r} + [q-r] N_{p,q-r} (bracket [b] = b for b >= 0, else 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, gcd
from typing import Mapping, Sequence

from .laurent import QPolynomial, Rational


class UntrustedCoefficientError(ValueError):
    """A coefficient outside the trusted truncation window was requested."""


class InconsistentPeriodsError(ValueError):
    """The period sequence cannot come from a tail-free leading term."""


class ReconstructionError(ValueError):
    """The extension recursion produced a series of the wrong shape."""


@dataclass(frozen=True)
class PeriodSequence:
    """Regularized period coefficients c_0..c_T with c_0 = 1."""

    coeffs: tuple[QPolynomial, ...]

    def __post_init__(self):
        clean = tuple(_as_coefficient(c) for c in self.coeffs)
        if not clean or clean[0] != QPolynomial.one():
            raise InconsistentPeriodsError("period sequences start with c_0 = 1")
        object.__setattr__(self, "coeffs", clean)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_plain(
        cls, values: Sequence[Rational | str], index: int
    ) -> PeriodSequence:
        """Decorate plain numbers with the Novikov powers q^(d/index)."""
        if index <= 0:
            raise ValueError(f"index must be positive, got {index}")
        coeffs = []
        for d, value in enumerate(values):
            amount = Fraction(value)
            if not amount:
                coeffs.append(QPolynomial.zero())
                continue
            if d % index:
                raise InconsistentPeriodsError(
                    f"nonzero c_{d} is off the index-{index} grading"
                )
            coeffs.append(QPolynomial.of(amount, d // index))
        return cls(tuple(coeffs))

    def grading_warnings(self, index: int) -> list[str]:
        """Coefficients that sit off the expected q^(d/index) grading."""
        messages = []
        for d, coeff in enumerate(self.coeffs):
            bad = [p for p, _ in coeff.items() if p * index != d]
            if bad:
                messages.append(
                    f"c_{d} carries q powers {bad} instead of d/{index}"
                )
        return messages


def _as_coefficient(value) -> QPolynomial:
    if isinstance(value, QPolynomial):
        return value
    return QPolynomial.constant(value)


@dataclass(frozen=True)
class ThetaSeries:
    """A truncated series t^p + sum_{i > 0} a_i t^(-i).

    `tail` maps i to a_i; `valid_to` is the largest i whose coefficient
    is trusted (None means the series is exact).  Do not hash: the tail
    mapping keeps plain dict storage.
    """

    p: int
    tail: dict[int, QPolynomial]
    valid_to: int | None

    def __post_init__(self):
        if self.p < 0:
            raise ValueError(f"leading exponent must be non-negative, got {self.p}")
        clean: dict[int, QPolynomial] = {}
        for i, value in self.tail.items():
            if not isinstance(i, int) or i <= 0:
                raise ValueError(f"tail indices must be positive integers, got {i!r}")
            coeff = _as_coefficient(value)
            if coeff:
                clean[i] = coeff
        if self.valid_to is not None:
            if self.valid_to < 0:
                raise ValueError(f"valid_to must be non-negative, got {self.valid_to}")
            beyond = [i for i in clean if i > self.valid_to]
            if beyond:
                raise ValueError(
                    f"tail indices {sorted(beyond)} exceed valid_to={self.valid_to}"
                )
        object.__setattr__(self, "tail", clean)

    def tail_term(self, i: int) -> QPolynomial:
        """a_i, refusing indices beyond the trusted window."""
        if i <= 0:
            raise ValueError(f"tail index must be positive, got {i}")
        if self.valid_to is not None and i > self.valid_to:
            raise UntrustedCoefficientError(
                f"tail index {i} exceeds trusted window {self.valid_to}"
            )
        return self.tail.get(i, QPolynomial.zero())

    def two_point(self, i: int) -> QPolynomial:
        """The quotient N_{p,i} = a_i / i."""
        return self.tail_term(i) / i


@dataclass(frozen=True)
class TruncatedSeries:
    """A finite Laurent-series window: trusted exactly for exponents >= floor.

    floor = None means the series is exact everywhere.
    """

    coeffs: dict[int, QPolynomial]
    floor: int | None

    def __post_init__(self):
        clean = {}
        for e, c in self.coeffs.items():
            coeff = _as_coefficient(c)
            if coeff and (self.floor is None or e >= self.floor):
                clean[e] = coeff
        object.__setattr__(self, "coeffs", clean)

    def coefficient(self, exponent: int) -> QPolynomial:
        if self.floor is not None and exponent < self.floor:
            raise UntrustedCoefficientError(
                f"exponent {exponent} lies below the trusted floor {self.floor}"
            )
        return self.coeffs.get(exponent, QPolynomial.zero())

    @property
    def top(self) -> int | None:
        return max(self.coeffs) if self.coeffs else None


def _as_truncated(series: ThetaSeries | TruncatedSeries) -> TruncatedSeries:
    if isinstance(series, TruncatedSeries):
        return series
    coeffs: dict[int, QPolynomial] = {series.p: QPolynomial.one()}
    for i, value in series.tail.items():
        coeffs[-i] = value
    floor = None if series.valid_to is None else -series.valid_to
    return TruncatedSeries(coeffs, floor)


def _floor_of_product(a: TruncatedSeries, b: TruncatedSeries) -> int | None:
    """Largest exponent that unknown low-order terms could contaminate."""
    candidates = []
    for known, other in ((a, b), (b, a)):
        if known.floor is None:
            continue
        top = other.top
        if top is None:
            top = other.floor
        if top is None:
            continue
        candidates.append(known.floor + top)
    return max(candidates) if candidates else None


def series_multiply(
    a: ThetaSeries | TruncatedSeries,
    b: ThetaSeries | TruncatedSeries,
    floor: int | None = None,
) -> TruncatedSeries:
    """Exact product within the joint validity window.

    The window floor is max(floor_a + top_b, floor_b + top_a); asking
    for a lower floor raises UntrustedCoefficientError instead of
    emitting contaminated coefficients.
    """
    left = _as_truncated(a)
    right = _as_truncated(b)
    trusted = _floor_of_product(left, right)
    if floor is None:
        floor = trusted
    elif trusted is not None and floor < trusted:
        raise UntrustedCoefficientError(
            f"requested floor {floor} is below the trusted floor {trusted}"
        )
    coeffs: dict[int, QPolynomial] = {}
    for e1, c1 in left.coeffs.items():
        for e2, c2 in right.coeffs.items():
            e = e1 + e2
            if floor is not None and e < floor:
                continue
            value = c1 * c2
            coeffs[e] = coeffs[e] + value if e in coeffs else value
    return TruncatedSeries(coeffs, floor)


def _power_residue(tail: Mapping[int, QPolynomial], degree: int) -> QPolynomial:
    """t^0 coefficient of (t + sum a_i t^(-i))^degree."""
    base: dict[int, QPolynomial] = {1: QPolynomial.one()}
    for i, value in tail.items():
        base[-i] = value
    current: dict[int, QPolynomial] = {0: QPolynomial.one()}
    for _ in range(degree):
        step: dict[int, QPolynomial] = {}
        for e1, c1 in current.items():
            for e2, c2 in base.items():
                e = e1 + e2
                value = c1 * c2
                step[e] = step[e] + value if e in step else value
        current = step
    return current.get(0, QPolynomial.zero())


def reconstruct_N1(periods: PeriodSequence) -> ThetaSeries:
    """The unique series t + sum a_i t^(-i) with N_1^d[t^0] = c_d.

    At step i the only new contribution to c_{i+1} is a_i paired with
    i+1 copies of the leading t, so a_i = (c_{i+1} - known part)/(i+1);
    the round trip back through residue products is checked by the test
    suite rather than assumed.
    """
    coeffs = periods.coeffs
    order = periods.order
    if order >= 1 and not coeffs[1].is_zero():
        raise InconsistentPeriodsError("c_1 must vanish for a tail-free leading term")
    tail: dict[int, QPolynomial] = {}
    for i in range(1, order):
        known = _power_residue(tail, i + 1)
        a_i = (coeffs[i + 1] - known) / (i + 1)
        if a_i:
            tail[i] = a_i
    return ThetaSeries(1, tail, valid_to=max(order - 1, 0))


def one_step_constants(n1: ThetaSeries, q_order: int, r: int) -> QPolynomial:
    """(q_order - r) times N_{1, q_order - r}, zero when the gap closes."""
    if not 0 <= r < 1 + q_order:
        raise ValueError(f"constant index {r} outside 0..{q_order}")
    gap = q_order - r
    if gap <= 0:
        return QPolynomial.zero()
    return n1.two_point(gap) * gap


def _require_ladder(series: Sequence[ThetaSeries]) -> None:
    for position, item in enumerate(series, 1):
        if item.p != position:
            raise ValueError(
                f"series at position {position} has leading exponent {item.p}"
            )


def extend_series(series: Sequence[ThetaSeries]) -> ThetaSeries:
    """N_n from N_1..N_{n-1} via the product recursion.

    N_n = N_1 N_{n-1} - sum_{j>=1} N_{1,n-1}^j N_j - c_0 where the
    constant c_0 = a_1(N_{n-1}) + (n-1) N_{1,n-1} removes the t^0 term.
    The result must come out as t^n plus a strictly negative tail with
    unit leading coefficient; anything else raises ReconstructionError,
    which is the diagnostic for non-geometric input periods.
    """
    if not series:
        raise ValueError("the extension recursion needs at least N_1")
    _require_ladder(series)
    n1 = series[0]
    previous = series[-1]
    n = previous.p + 1
    product = series_multiply(n1, previous)
    coeffs = dict(product.coeffs)
    floor = product.floor

    def subtract(scalar: QPolynomial, portion: TruncatedSeries) -> None:
        nonlocal floor
        if portion.floor is not None:
            floor = portion.floor if floor is None else max(floor, portion.floor)
        for e, c in portion.coeffs.items():
            value = scalar * c
            coeffs[e] = coeffs[e] - value if e in coeffs else -value

    for j in range(1, n):
        scalar = one_step_constants(n1, n - 1, j)
        if scalar:
            subtract(scalar, _as_truncated(series[j - 1]))
    constant = previous.tail_term(1) + n1.two_point(n - 1) * (n - 1)
    if constant:
        coeffs[0] = coeffs.get(0, QPolynomial.zero()) - constant

    if floor is not None and floor > 0:
        raise UntrustedCoefficientError(
            f"validity window floor {floor} cannot certify the leading form"
        )
    survivors = {
        e: c
        for e, c in coeffs.items()
        if c and (floor is None or e >= floor)
    }
    if survivors.get(n) != QPolynomial.one():
        raise ReconstructionError(f"leading term of N_{n} is not t^{n}")
    stray = sorted(e for e in survivors if 0 <= e < n)
    if stray:
        raise ReconstructionError(
            f"N_{n} keeps terms at non-negative exponents {stray}"
        )
    high = sorted(e for e in survivors if e > n)
    if high:
        raise ReconstructionError(f"N_{n} has terms above t^{n} at {high}")
    tail = {-e: c for e, c in survivors.items() if e < 0}
    valid_to = None if floor is None else -floor
    return ThetaSeries(n, tail, valid_to)


@dataclass(frozen=True)
class StructureTable:
    """Structure constants entry(p, q, r) for p + q <= total.

    Only nonzero entries are stored; the accessor fills in zeros for
    every in-range key.
    """

    total: int
    entries: dict[tuple[int, int, int], QPolynomial] = field(default_factory=dict)

    def __post_init__(self):
        clean = {
            key: _as_coefficient(value)
            for key, value in self.entries.items()
            if _as_coefficient(value)
        }
        object.__setattr__(self, "entries", clean)

    def entry(self, p: int, q: int, r: int) -> QPolynomial:
        if p < 0 or q < 0 or p + q > self.total:
            raise ValueError(f"pair ({p},{q}) outside total degree {self.total}")
        if not 0 <= r <= p + q:
            raise ValueError(f"target index {r} outside 0..{p + q}")
        return self.entries.get((p, q, r), QPolynomial.zero())


def structure_table(series: Sequence[ThetaSeries], total: int) -> StructureTable:
    """All structure constants with p + q <= total.

    entry(p,q,p+q) = 1; otherwise [p-r] N_{q,p-r} + [q-r] N_{p,q-r}
    with [b] = b for b >= 0 and 0 below.  The q = 0 row degenerates to
    the identity since the constant series has an empty tail.
    """
    _require_ladder(series)
    if total > len(series):
        raise ValueError(
            f"need series through N_{total} for total degree {total}"
        )

    def n_value(q: int, i: int) -> QPolynomial:
        if q == 0:
            return QPolynomial.zero()
        return series[q - 1].two_point(i)

    entries: dict[tuple[int, int, int], QPolynomial] = {}
    for p in range(total + 1):
        for q in range(total + 1 - p):
            for r in range(p + q + 1):
                if r == p + q:
                    value = QPolynomial.one()
                else:
                    value = QPolynomial.zero()
                    if p - r > 0:
                        value = value + n_value(q, p - r) * (p - r)
                    if q - r > 0:
                        value = value + n_value(p, q - r) * (q - r)
                if value:
                    entries[(p, q, r)] = value
    return StructureTable(total, entries)


def table_records(table: StructureTable) -> list[dict]:
    """Every in-range entry as {"p","q","r","value"} with exact strings."""
    records = []
    for p in range(table.total + 1):
        for q in range(table.total + 1 - p):
            for r in range(p + q + 1):
                records.append(
                    {"p": p, "q": q, "r": r, "value": str(table.entry(p, q, r))}
                )
    return records


def residue_product(series: Sequence[ThetaSeries | TruncatedSeries]) -> QPolynomial:
    """t^0 coefficient of the exact windowed product of the factors."""
    accumulated = TruncatedSeries({0: QPolynomial.one()}, None)
    for item in series:
        accumulated = series_multiply(accumulated, item)
    return accumulated.coefficient(0)


def _entry_or_zero(table: StructureTable, p: int, q: int, r: int) -> QPolynomial:
    """Table lookup extended by the vanishing above r = p + q."""
    if r > p + q:
        return QPolynomial.zero()
    return table.entry(p, q, r)


def associativity_check(
    table: StructureTable, q_cutoff: int | None = None
) -> list[dict]:
    """Compare (theta_p theta_q) theta_r with theta_p (theta_q theta_r).

    Runs over every triple with p + q + r <= the table's total degree
    and every target u; a violation record names the cell and both
    sides.  q_cutoff compares only Novikov powers up to the cutoff;
    None compares exactly.
    """

    def trim(value: QPolynomial) -> QPolynomial:
        if q_cutoff is None:
            return value
        return QPolynomial({p: c for p, c in value.items() if p <= q_cutoff})

    violations = []
    total = table.total
    for p in range(total + 1):
        for q in range(total + 1 - p):
            for r in range(total + 1 - p - q):
                for u in range(p + q + r + 1):
                    left = QPolynomial.zero()
                    for s in range(p + q + 1):
                        left = left + table.entry(p, q, s) * _entry_or_zero(
                            table, s, r, u
                        )
                    right = QPolynomial.zero()
                    for s in range(q + r + 1):
                        right = right + table.entry(q, r, s) * _entry_or_zero(
                            table, p, s, u
                        )
                    if trim(left) != trim(right):
                        violations.append(
                            {
                                "p": p,
                                "q": q,
                                "r": r,
                                "u": u,
                                "left": str(left),
                                "right": str(right),
                            }
                        )
    return violations


def unregularize(periods: PeriodSequence) -> list[QPolynomial]:
    """Divide out the factorials: the d-th value is c_d / d!."""
    return [coeff / factorial(d) for d, coeff in enumerate(periods.coeffs)]


# ---------------------------------------------------------------------------
# JSON serialization
#
# {"index": 3, "coeffs": ["1", "0", "0", "6", ...]}
# Coefficient strings are plain rationals; the Novikov power of c_d is
# implied as d / index, so parsing re-decorates what emitting strips.


def periods_to_json(periods: PeriodSequence) -> dict:
    """Serialize with the grading index recovered from the coefficients.

    Each nonzero c_d must sit in a single Novikov power p; decorated
    coefficients (p > 0) must agree on d / p, which becomes the stored
    index.  Undecorated input falls back to the gcd of the nonzero
    positions, and 1 when only c_0 is nonzero.
    """
    values: list[str] = []
    ratios: set[int] = set()
    positions: list[int] = []
    for d, coeff in enumerate(periods.coeffs):
        items = coeff.items()
        if len(items) > 1:
            raise InconsistentPeriodsError(
                f"c_{d} mixes Novikov powers and has no period-file form"
            )
        if not items:
            values.append("0")
            continue
        power, amount = items[0]
        values.append(str(amount))
        if d:
            positions.append(d)
        if power:
            if d % power:
                raise InconsistentPeriodsError(
                    f"c_{d} sits at q^{power}, which divides no grading index"
                )
            ratios.add(d // power)
    if len(ratios) > 1:
        raise InconsistentPeriodsError(
            f"coefficients imply conflicting grading indices {sorted(ratios)}"
        )
    if ratios:
        index = ratios.pop()
    elif positions:
        index = gcd(*positions)
    else:
        index = 1
    return {"index": index, "coeffs": values}


def periods_from_json(data: Mapping) -> PeriodSequence:
    if not isinstance(data, Mapping):
        raise InconsistentPeriodsError("period JSON must be an object")
    index = data.get("index")
    if not isinstance(index, int) or isinstance(index, bool) or index <= 0:
        raise InconsistentPeriodsError(f'bad grading "index" {index!r}')
    values = data.get("coeffs")
    if not isinstance(values, (list, tuple)) or not all(
        isinstance(v, str) for v in values
    ):
        raise InconsistentPeriodsError('"coeffs" must be a list of strings')
    try:
        return PeriodSequence.from_plain(values, index)
    except (ValueError, ZeroDivisionError) as err:
        if isinstance(err, InconsistentPeriodsError):
            raise
        raise InconsistentPeriodsError(f"unreadable coefficient: {err}") from err
