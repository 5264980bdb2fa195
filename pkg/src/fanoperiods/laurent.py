"""Exact sparse Laurent-polynomial arithmetic over the rationals.

Coefficients live in Q[q] for a single formal parameter q (used to track
degrees of mirror maps), represented sparsely as maps from q-power to
Fraction.  Laurent polynomials are maps from integer exponent vectors to
such coefficients.  Everything is exact; no floating point appears
anywhere in this package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence, Union

Rational = Union[int, Fraction]


class RankMismatchError(ValueError):
    """Raised when two polynomials do not share a variable context."""


class ZeroPolynomialError(ValueError):
    """Raised by operations undefined on the zero polynomial."""


def _as_fraction(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class QPolynomial:
    """A polynomial in the parameter q with rational coefficients.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Rational] | None = None):
        clean: dict[int, Fraction] = {}
        if coeffs:
            for to_power, value in coeffs.items():
                if not isinstance(to_power, int) or to_power < 0:
                    raise ValueError(f"invalid q-power {to_power!r}")
                frac = _as_fraction(value)
                if frac:
                    clean[to_power] = frac
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def zero(cls) -> QPolynomial:
        return cls()

    @classmethod
    def one(cls) -> QPolynomial:
        return cls({0: Fraction(1)})

    @classmethod
    def constant(cls, value: Rational) -> QPolynomial:
        return cls({0: _as_fraction(value)})

    @classmethod
    def of(cls, value: Rational, q_power: int = 0) -> QPolynomial:
        return cls({q_power: _as_fraction(value)})

    def items(self) -> tuple[tuple[int, Fraction], ...]:
        return tuple(sorted(self._coeffs.items()))

    def coefficient(self, q_power: int) -> Fraction:
        return self._coeffs.get(q_power, Fraction(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def is_constant(self) -> bool:
        return not self._coeffs or set(self._coeffs) == {0}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not q-free")
        return self._coeffs.get(0, Fraction(0))

    def max_q_power(self) -> int:
        if not self._coeffs:
            raise ZeroPolynomialError("zero polynomial has no q-degree")
        return max(self._coeffs)

    def shift_q(self, by: int) -> QPolynomial:
        """Multiply by q**by."""
        return QPolynomial({p + by: c for p, c in self._coeffs.items()})

    def specialize_q(self, value: Rational) -> Fraction:
        v = _as_fraction(value)
        return sum((c * v**p for p, c in self._coeffs.items()), Fraction(0))

    def __add__(self, other: QPolynomial) -> QPolynomial:
        if not isinstance(other, QPolynomial):
            return NotImplemented
        total = dict(self._coeffs)
        for p, c in other._coeffs.items():
            total[p] = total.get(p, Fraction(0)) + c
        return QPolynomial(total)

    def __neg__(self) -> QPolynomial:
        return QPolynomial({p: -c for p, c in self._coeffs.items()})

    def __sub__(self, other: QPolynomial) -> QPolynomial:
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: QPolynomial | Rational) -> QPolynomial:
        if isinstance(other, QPolynomial):
            total: dict[int, Fraction] = {}
            for p, c in self._coeffs.items():
                for p2, c2 in other._coeffs.items():
                    key = p + p2
                    total[key] = total.get(key, Fraction(0)) + c * c2
            return QPolynomial(total)
        if isinstance(other, (int, Fraction)):
            scale = _as_fraction(other)
            return QPolynomial({p: c * scale for p, c in self._coeffs.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, divisor: Rational) -> QPolynomial:
        scale = _as_fraction(divisor)
        if not scale:
            raise ZeroDivisionError("division of a q-polynomial by zero")
        return QPolynomial({p: c / scale for p, c in self._coeffs.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self.items())

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        pieces: list[str] = []
        for p, c in self.items():
            if p == 0:
                body = str(c)
            else:
                q_part = "q" if p == 1 else f"q^{p}"
                if c == 1:
                    body = q_part
                elif c == -1:
                    body = f"-{q_part}"
                else:
                    body = f"{c}{q_part}"
            if not pieces:
                pieces.append(body)
            elif body.startswith("-"):
                pieces.append(f"- {body[1:]}")
            else:
                pieces.append(f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"QPolynomial({dict(self.items())!r})"


def _as_qpolynomial(value: QPolynomial | Rational) -> QPolynomial:
    if isinstance(value, QPolynomial):
        return value
    return QPolynomial.constant(value)


ExponentVector = tuple[int, ...]


class LaurentPolynomial:
    """A Laurent polynomial in named variables with QPolynomial coefficients."""

    __slots__ = ("names", "terms")

    def __init__(
        self,
        names: Sequence[str],
        terms: Mapping[ExponentVector, QPolynomial] | None = None,
    ):
        names_t = tuple(names)
        if len(set(names_t)) != len(names_t):
            raise ValueError(f"variable names must be distinct: {names_t!r}")
        clean: dict[ExponentVector, QPolynomial] = {}
        if terms:
            for exponents, coeff in terms.items():
                exp_t = tuple(exponents)
                if len(exp_t) != len(names_t):
                    raise RankMismatchError(
                        f"exponent vector {exp_t!r} does not match rank {len(names_t)}"
                    )
                if not all(isinstance(e, int) for e in exp_t):
                    raise ValueError(f"non-integer exponent vector {exp_t!r}")
                if coeff:
                    clean[exp_t] = coeff
        object.__setattr__(self, "names", names_t)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    @property
    def rank(self) -> int:
        return len(self.names)

    @classmethod
    def zero(cls, names: Sequence[str]) -> LaurentPolynomial:
        return cls(names)

    @classmethod
    def one(cls, names: Sequence[str]) -> LaurentPolynomial:
        return cls.monomial(names, (0,) * len(tuple(names)))

    @classmethod
    def monomial(
        cls,
        names: Sequence[str],
        exponents: Sequence[int],
        coeff: QPolynomial | Rational = 1,
        q_power: int = 0,
    ) -> LaurentPolynomial:
        value = _as_qpolynomial(coeff).shift_q(q_power)
        return cls(names, {tuple(exponents): value})

    @classmethod
    def from_dict(
        cls,
        names: Sequence[str],
        terms: Mapping[Sequence[int], QPolynomial | Rational],
    ) -> LaurentPolynomial:
        return cls(
            names,
            {tuple(e): _as_qpolynomial(c) for e, c in terms.items()},
        )

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coefficient(self, exponents: Sequence[int]) -> QPolynomial:
        return self.terms.get(tuple(exponents), QPolynomial.zero())

    def map_coefficients(self, fn) -> LaurentPolynomial:
        return LaurentPolynomial(
            self.names, {e: fn(c) for e, c in self.terms.items()}
        )

    def __add__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        _require_same_context(self, other)
        total = dict(self.terms)
        for e, c in other.terms.items():
            merged = total.get(e, QPolynomial.zero()) + c
            if merged:
                total[e] = merged
            else:
                total.pop(e, None)
        return LaurentPolynomial(self.names, total)

    def __neg__(self) -> LaurentPolynomial:
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        return self + (-other)

    def __mul__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            return multiply(self, other)
        return NotImplemented

    def __pow__(self, degree: int) -> LaurentPolynomial:
        return power(self, degree)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.names == other.names and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.names, tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        body = {e: str(c) for e, c in sorted(self.terms.items())}
        return f"LaurentPolynomial({self.names!r}, {body!r})"


def _require_same_context(f: LaurentPolynomial, g: LaurentPolynomial) -> None:
    if f.names != g.names:
        raise RankMismatchError(
            f"variable contexts differ: {f.names!r} vs {g.names!r}"
        )


def multiply(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    """Exact product of two Laurent polynomials in the same variables."""
    _require_same_context(f, g)
    total: dict[ExponentVector, QPolynomial] = {}
    for e, c in f.terms.items():
        for e2, c2 in g.terms.items():
            key = tuple(a + b for a, b in zip(e, e2))
            prior = total.get(key)
            total[key] = c * c2 if prior is None else prior + c * c2
    return LaurentPolynomial(f.names, total)


def power(f: LaurentPolynomial, degree: int) -> LaurentPolynomial:
    """f**degree by iterated multiplication; degree 0 gives 1 for every f."""
    if degree < 0:
        raise ValueError("negative powers of Laurent polynomials are not supported")
    result = LaurentPolynomial.one(f.names)
    for _ in range(degree):
        result = multiply(result, f)
    return result


def constant_term(f: LaurentPolynomial) -> QPolynomial:
    """Coefficient of the zero exponent vector."""
    return f.coefficient((0,) * f.rank)


def classical_periods(f: LaurentPolynomial, order: int) -> list[QPolynomial]:
    """Constant terms of f**d for d = 0..order.

    Computed incrementally with one multiplication per degree; c_0 is 1
    even for the zero polynomial (empty product convention).
    """
    if order < 0:
        raise ValueError("period order must be non-negative")
    out: list[QPolynomial] = []
    current = LaurentPolynomial.one(f.names)
    for d in range(order + 1):
        out.append(constant_term(current))
        if d < order:
            current = multiply(current, f)
    return out


def tropical_value(f: LaurentPolynomial, direction: Sequence[Rational]) -> Fraction:
    """min over the support of the pairing with `direction`."""
    if f.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no tropicalization")
    v = tuple(_as_fraction(c) for c in direction)
    if len(v) != f.rank:
        raise RankMismatchError(
            f"direction of length {len(v)} against rank {f.rank}"
        )
    return min(
        sum((Fraction(e_i) * v_i for e_i, v_i in zip(e, v)), Fraction(0))
        for e in f.terms
    )


def support(f: LaurentPolynomial) -> list[ExponentVector]:
    """Exponent vectors with nonzero coefficient, sorted lexicographically."""
    return sorted(f.terms)


def min_exponent_vector(f: LaurentPolynomial) -> tuple[ExponentVector, bool]:
    """Componentwise minimum of the support, and whether a single term attains it."""
    if f.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no minimal exponent vector")
    vectors = list(f.terms)
    lower = tuple(min(e[i] for e in vectors) for i in range(f.rank))
    return lower, lower in f.terms


# ---------------------------------------------------------------------------
# JSON serialization
#
# {"vars": ["x", "y"], "terms": [{"coeff": "3/2", "q": 0, "exp": [1, -1]}]}
# Coefficient strings are decimal integers or "p/q" fractions; "q" is the
# power of the Novikov parameter and defaults to 0.


def laurent_to_json(f: LaurentPolynomial) -> dict:
    records = []
    for e in sorted(f.terms):
        for q_power, value in f.terms[e].items():
            records.append({"coeff": str(value), "q": q_power, "exp": list(e)})
    return {"vars": list(f.names), "terms": records}


def laurent_from_json(data: Mapping) -> LaurentPolynomial:
    if not isinstance(data, Mapping):
        raise ValueError("laurent JSON must be an object")
    names = data.get("vars")
    if (
        not isinstance(names, (list, tuple))
        or not names
        or not all(isinstance(v, str) for v in names)
    ):
        raise ValueError('laurent JSON needs a non-empty "vars" list of strings')
    records = data.get("terms", [])
    if not isinstance(records, (list, tuple)):
        raise ValueError('"terms" must be a list')
    rank = len(names)
    accumulated: dict[ExponentVector, dict[int, Fraction]] = {}
    seen: set[tuple[ExponentVector, int]] = set()
    for record in records:
        if not isinstance(record, Mapping):
            raise ValueError(f"bad term record {record!r}")
        exp = record.get("exp")
        if (
            not isinstance(exp, (list, tuple))
            or len(exp) != rank
            or not all(isinstance(e, int) and not isinstance(e, bool) for e in exp)
        ):
            raise ValueError(f"bad exponent vector {exp!r} for rank {rank}")
        q_power = record.get("q", 0)
        if not isinstance(q_power, int) or isinstance(q_power, bool) or q_power < 0:
            raise ValueError(f"bad q-power {q_power!r}")
        key = (tuple(exp), q_power)
        if key in seen:
            raise ValueError(f"duplicate exponent entry {key!r}")
        seen.add(key)
        raw = record.get("coeff")
        if not isinstance(raw, str):
            raise ValueError(f"coefficient must be a string, got {raw!r}")
        try:
            value = Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad coefficient string {raw!r}") from exc
        accumulated.setdefault(tuple(exp), {})[q_power] = value
    return LaurentPolynomial(
        tuple(names),
        {e: QPolynomial(qs) for e, qs in accumulated.items()},
    )
