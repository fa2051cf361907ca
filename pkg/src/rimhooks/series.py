"""Truncated power series over exact integers, univariate and trace-refined.

The univariate side checks that the size generating function of the fillings
of a shape equals the product of geometric series indexed by hook lengths.
The multivariate side refines by diagonal traces: one variable per diagonal,
one geometric factor per cell whose monomial covers the content interval of
the cell's hook. No floating point is used anywhere.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .enumeration import enumerate_rpps
from .geometry import Partition
from .rpp import Rpp

_TERM_RE = re.compile(r"^\s*(-?\d+)(?:\s*\*\s*q(?:\^(\d+))?)?\s*$")
_VAR_RE = re.compile(r"q_\{?(-?\d+)\}?(?:\^(\d+))?")


@dataclass(frozen=True)
class TruncatedSeries:
    """Integer coefficients c_0 .. c_N of a series truncated past degree N."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a truncated series needs at least the constant term")

    @property
    def truncation(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def one(cls, truncation: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * truncation)

    @classmethod
    def geometric(cls, gap: int, truncation: int) -> "TruncatedSeries":
        """1 / (1 - q^gap) truncated: ones at the multiples of gap."""
        if gap <= 0:
            raise ValueError("gap must be positive")
        return cls(tuple(1 if n % gap == 0 else 0 for n in range(truncation + 1)))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.truncation != other.truncation:
            raise ValueError("cannot multiply series with different truncations")
        n = self.truncation
        a, b = self.coefficients, other.coefficients
        out = [0] * (n + 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j in range(n + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
        return TruncatedSeries(tuple(out))

    def to_text(self) -> str:
        parts = [str(self.coefficients[0])]
        for n, c in enumerate(self.coefficients[1:], start=1):
            parts.append(f"{c}*q" if n == 1 else f"{c}*q^{n}")
        return " + ".join(parts)

    __str__ = to_text

    @classmethod
    def from_text(cls, text: str) -> "TruncatedSeries":
        coeffs = []
        for n, term in enumerate(text.split("+")):
            m = _TERM_RE.match(term)
            if m is None:
                raise ValueError(f"cannot parse series term {term!r}")
            degree = 0 if m.group(2) is None and "*" not in term else int(m.group(2) or 1)
            if degree != n:
                raise ValueError(f"term {term!r} out of order; expected degree {n}")
            coeffs.append(int(m.group(1)))
        return cls(tuple(coeffs))

    def to_json_obj(self) -> dict:
        return {"truncation": self.truncation, "coefficients": list(self.coefficients)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "TruncatedSeries":
        series = cls(tuple(int(c) for c in obj["coefficients"]))
        if series.truncation != obj.get("truncation", series.truncation):
            raise ValueError("truncation does not match the coefficient count")
        return series

    @classmethod
    def from_json(cls, text: str) -> "TruncatedSeries":
        return cls.from_json_obj(json.loads(text))


def hook_product(shape: Partition, truncation: int) -> TruncatedSeries:
    """Product over all cells of 1 / (1 - q^{hook length}), truncated."""
    acc = TruncatedSeries.one(truncation)
    for u in shape.cells():
        acc = acc * TruncatedSeries.geometric(shape.hook_length(u), truncation)
    return acc


def rpp_series(shape: Partition, truncation: int) -> TruncatedSeries:
    """Coefficient of q^n counts the fillings of the shape with size n."""
    coeffs = [0] * (truncation + 1)
    for pi in enumerate_rpps(shape, truncation):
        coeffs[pi.size] += 1
    return TruncatedSeries(tuple(coeffs))


Monomial = tuple[int, ...]


class MultiTraceSeries:
    """A series in one variable per diagonal, truncated by total degree.

    Exponent vectors are indexed by the diagonals var_lo .. var_hi of a shape;
    only nonzero coefficients are stored. The total degree of a monomial is
    the size of any filling with those traces, which is why truncation is by
    total degree.
    """

    def __init__(self, var_lo: int, var_hi: int, degree: int, terms: dict[Monomial, int]):
        self.var_lo = var_lo
        self.var_hi = var_hi
        self.degree = degree
        self.terms = dict(terms)

    @property
    def variables(self) -> range:
        return range(self.var_lo, self.var_hi + 1)

    @classmethod
    def one(cls, var_lo: int, var_hi: int, degree: int) -> "MultiTraceSeries":
        width = max(var_hi - var_lo + 1, 0)
        return cls(var_lo, var_hi, degree, {(0,) * width: 1})

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiTraceSeries):
            return NotImplemented
        if (self.var_lo, self.var_hi, self.degree) != (
            other.var_lo,
            other.var_hi,
            other.degree,
        ):
            return False
        return {m: c for m, c in self.terms.items() if c} == {
            m: c for m, c in other.terms.items() if c
        }

    def __repr__(self) -> str:
        return (
            f"MultiTraceSeries(vars {self.var_lo}..{self.var_hi}, "
            f"degree {self.degree}, {len(self._sorted_terms())} terms)"
        )

    def add_term(self, monomial: Monomial, coefficient: int) -> None:
        if sum(monomial) <= self.degree:
            self.terms[monomial] = self.terms.get(monomial, 0) + coefficient

    def times_geometric(self, monomial: Monomial) -> "MultiTraceSeries":
        """Multiply by 1 / (1 - monomial), truncated by total degree."""
        step = sum(monomial)
        if step <= 0:
            raise ValueError("geometric factor needs a monomial of positive degree")
        out: dict[Monomial, int] = {}
        for exps, coeff in self.terms.items():
            if coeff == 0:
                continue
            total = sum(exps)
            shifted = exps
            while total <= self.degree:
                out[shifted] = out.get(shifted, 0) + coeff
                total += step
                shifted = tuple(a + b for a, b in zip(shifted, monomial))
        return MultiTraceSeries(self.var_lo, self.var_hi, self.degree, out)

    def specialize(self) -> TruncatedSeries:
        """Set every variable to q: collect coefficients by total degree."""
        coeffs = [0] * (self.degree + 1)
        for exps, coeff in self.terms.items():
            coeffs[sum(exps)] += coeff
        return TruncatedSeries(tuple(coeffs))

    def _sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted((m, c) for m, c in self.terms.items() if c)

    def format_monomial(self, exps: Monomial) -> str:
        pieces = []
        for k, e in zip(self.variables, exps):
            if e == 1:
                pieces.append(f"q_{{{k}}}")
            elif e > 1:
                pieces.append(f"q_{{{k}}}^{e}")
        return " ".join(pieces) if pieces else "1"

    def to_text(self) -> str:
        lines = [f"{c} : {self.format_monomial(m)}" for m, c in self._sorted_terms()]
        return "\n".join(lines)

    __str__ = to_text

    @classmethod
    def from_text(
        cls, text: str, var_lo: int, var_hi: int, degree: int
    ) -> "MultiTraceSeries":
        width = max(var_hi - var_lo + 1, 0)
        series = cls(var_lo, var_hi, degree, {})
        for line in text.splitlines():
            if not line.strip():
                continue
            coeff_text, _, mono_text = line.partition(":")
            exps = [0] * width
            for m in _VAR_RE.finditer(mono_text):
                exps[int(m.group(1)) - var_lo] = int(m.group(2) or 1)
            series.add_term(tuple(exps), int(coeff_text))
        return series

    def to_json_obj(self) -> dict:
        return {
            "variables": list(self.variables),
            "degree": self.degree,
            "terms": [[list(m), c] for m, c in self._sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "MultiTraceSeries":
        variables = obj["variables"]
        var_lo = variables[0] if variables else 1
        var_hi = variables[-1] if variables else 0
        return cls(
            var_lo,
            var_hi,
            obj["degree"],
            {tuple(m): int(c) for m, c in obj["terms"]},
        )

    @classmethod
    def from_json(cls, text: str) -> "MultiTraceSeries":
        return cls.from_json_obj(json.loads(text))


def _variable_range(shape: Partition) -> tuple[int, int]:
    if not shape:
        return (1, 0)
    return (1 - shape.length, shape.parts[0] - 1)


def hook_monomial(shape: Partition, u: tuple[int, int]) -> Monomial:
    """Exponent vector with a 1 for every diagonal met by the hook of u.

    The contents covered are the interval from (column - column length) to
    (row length - row) of the anchor.
    """
    var_lo, var_hi = _variable_range(shape)
    i, j = u
    lo = j - shape.col_length(j)
    hi = shape.row_length(i) - i
    return tuple(1 if lo <= k <= hi else 0 for k in range(var_lo, var_hi + 1))


def gansner_product(shape: Partition, degree: int) -> MultiTraceSeries:
    """Product over all cells of 1 / (1 - q^{hook content interval})."""
    var_lo, var_hi = _variable_range(shape)
    acc = MultiTraceSeries.one(var_lo, var_hi, degree)
    for u in shape.cells():
        acc = acc.times_geometric(hook_monomial(shape, u))
    return acc


def trace_monomial(pi: Rpp) -> Monomial:
    var_lo, var_hi = _variable_range(pi.shape)
    return tuple(pi.trace(k) for k in range(var_lo, var_hi + 1))


def trace_series(shape: Partition, degree: int) -> MultiTraceSeries:
    """Sum over all fillings of size at most `degree` of their trace monomial."""
    var_lo, var_hi = _variable_range(shape)
    acc = MultiTraceSeries(var_lo, var_hi, degree, {})
    for pi in enumerate_rpps(shape, degree):
        acc.add_term(trace_monomial(pi), 1)
    return acc
