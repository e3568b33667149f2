"""Alliance polynomial value type"""

import json
from fractions import Fraction
from types import MappingProxyType
from typing import Any, Dict, Mapping, Tuple, Union

from utils.errors import BadParams, IndexOutOfKRange, UnionTooLarge

MAX_UNION_ORDER = 64

Number = Union[int, Fraction, str]


class AlliancePolynomial:
    """Exact alliance polynomial ``A(G;x) = sum_k A_k(G) x^(n+k)``

    Coefficients are keyed by the exponent ``n + k``; zero coefficients are
    never stored. ``n`` and ``delta`` record the order and maximum degree of
    the source graph. Equality and hashing look at the coefficients only,
    as two graphs of different order can share a polynomial in ``x``.
    """

    __slots__ = ("_n", "_delta", "_coeffs", "_key")

    def __init__(self, n: int, delta: int, coefficients: Mapping[int, int]):
        """Initialize polynomial

        Args:
            n: Order of the source graph
            delta: Maximum degree of the source graph
            coefficients: Map from exponent ``n + k`` to ``A_k``
        """
        if n < 1 or not 0 <= delta <= n - 1:
            raise BadParams(f"Inconsistent order/maximum degree pair n={n}, delta={delta}")

        coeffs: Dict[int, int] = {}
        for exponent in sorted(coefficients):
            value = int(coefficients[exponent])
            if value < 0:
                raise BadParams(f"Negative coefficient {value} at x^{exponent}")
            if value == 0:
                continue
            if not (n - delta <= exponent <= n + delta):
                raise IndexOutOfKRange(
                    f"Exponent {exponent} outside [{n - delta}, {n + delta}] for n={n}, delta={delta}"
                )
            coeffs[int(exponent)] = value

        if not coeffs:
            raise BadParams("An alliance polynomial has at least one term")

        self._n = n
        self._delta = delta
        self._coeffs = MappingProxyType(coeffs)
        self._key = tuple(coeffs.items())

    # Accessors

    @property
    def n(self) -> int:
        return self._n

    @property
    def delta(self) -> int:
        return self._delta

    @property
    def coefficients(self) -> Mapping[int, int]:
        return self._coeffs

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(self._coeffs)

    @property
    def term_count(self) -> int:
        return len(self._coeffs)

    @property
    def degree(self) -> int:
        """``Deg(A)``: largest exponent with a nonzero coefficient"""
        return max(self._coeffs)

    @property
    def min_degree(self) -> int:
        """``Deg_min(A)``: smallest exponent with a nonzero coefficient"""
        return min(self._coeffs)

    def coefficient(self, k: int) -> int:
        """``A_k(G)``, zero when absent

        Args:
            k: Alliance index in ``[-delta, delta]``
        """
        if not -self._delta <= k <= self._delta:
            raise IndexOutOfKRange(f"k={k} outside [-{self._delta}, {self._delta}]")
        return self._coeffs.get(self._n + k, 0)

    def coefficient_sequence(self) -> Tuple[int, ...]:
        """``(A_{-delta}, ..., A_{delta})`` including zeros"""
        return tuple(self._coeffs.get(self._n + k, 0) for k in range(-self._delta, self._delta + 1))

    def evaluate(self, x: Number) -> Fraction:
        """Exact value at a rational point"""
        x = Fraction(x)
        return sum((Fraction(c) * x ** e for e, c in self._coeffs.items()), Fraction(0))

    # Rendering

    def to_text(self) -> str:
        return " + ".join(f"{c}*x^{e}" for e, c in self._coeffs.items())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self._n,
            "delta": self._delta,
            "coeffs": {str(e): str(c) for e, c in self._coeffs.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def render(self, fmt: str = "text") -> str:
        if fmt == "text":
            return self.to_text()
        if fmt == "json":
            return self.to_json()
        raise BadParams(f"Unknown polynomial format {fmt!r}; expected 'text' or 'json'")

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "AlliancePolynomial":
        try:
            coeffs = {int(e): int(c) for e, c in data["coeffs"].items()}
            return cls(int(data["n"]), int(data["delta"]), coeffs)
        except (KeyError, TypeError, ValueError, AttributeError) as e:
            raise BadParams(f"Malformed polynomial record {dict(data)!r}: {e}")

    @classmethod
    def from_json(cls, text: str) -> "AlliancePolynomial":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise BadParams(f"Polynomial is not valid JSON: {e}")
        return cls.from_dict(data)

    # Dunder helpers

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlliancePolynomial):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"AlliancePolynomial(n={self._n}, delta={self._delta}, {self.to_text()})"

    def __str__(self) -> str:
        return self.to_text()


def coefficient(p: AlliancePolynomial, k: int) -> int:
    return p.coefficient(k)


def evaluate(p: AlliancePolynomial, x: Number) -> Fraction:
    return p.evaluate(x)


def render(p: AlliancePolynomial, fmt: str = "text") -> str:
    return p.render(fmt)


def disjoint_union_poly(pg: AlliancePolynomial, ph: AlliancePolynomial) -> AlliancePolynomial:
    """Polynomial of a disjoint union from the polynomials of its parts

    Every connected set lies inside one part and keeps its index, so
    ``A(G ∪ H; x) = x^{n_H} A(G; x) + x^{n_G} A(H; x)``.
    """
    n = pg.n + ph.n
    if n > MAX_UNION_ORDER:
        raise UnionTooLarge(f"Union order {pg.n} + {ph.n} exceeds {MAX_UNION_ORDER}")

    coeffs: Dict[int, int] = {}
    for e, c in pg.coefficients.items():
        coeffs[e + ph.n] = coeffs.get(e + ph.n, 0) + c
    for e, c in ph.coefficients.items():
        coeffs[e + pg.n] = coeffs.get(e + pg.n, 0) + c
    return AlliancePolynomial(n, max(pg.delta, ph.delta), coeffs)
