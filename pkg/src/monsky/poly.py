"""Exact sparse multivariate polynomials over the integers, and the
closed-form area relation of the diagonal family.

A polynomial lives over a fixed ordered tuple of variable names (its
universe); terms map dense exponent tuples to nonzero integer coefficients.
The monomial order is graded lexicographic: larger total degree first, ties
broken by comparing exponent tuples with the first-listed variable most
significant.  The order is used only for deterministic printing and sign
normalization.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

from .errors import (
    BadParameters,
    IndexOutOfRange,
    MissingVariable,
    NotDivisible,
    VariableUniverseMismatch,
    ZeroPolynomial,
)

Exponents = tuple[int, ...]


def _grlex(item: tuple[Exponents, int]):
    exps, _ = item
    return (sum(exps), exps)


@dataclass(frozen=True)
class MultiPoly:
    """An integer polynomial over an ordered variable universe."""

    variables: tuple[str, ...]
    terms: dict[Exponents, int] = field(default_factory=dict)

    def __post_init__(self):
        width = len(self.variables)
        for exps, coeff in self.terms.items():
            if len(exps) != width or any(e < 0 for e in exps):
                raise BadParameters(f"exponent tuple {exps} does not fit {width} variables")
            if coeff == 0:
                raise BadParameters("zero coefficients must not be stored")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(variables: Iterable[str]) -> "MultiPoly":
        return MultiPoly(tuple(variables), {})

    @staticmethod
    def constant(variables: Iterable[str], value: int) -> "MultiPoly":
        variables = tuple(variables)
        if value == 0:
            return MultiPoly(variables, {})
        return MultiPoly(variables, {(0,) * len(variables): int(value)})

    @staticmethod
    def variable(variables: Iterable[str], name: str) -> "MultiPoly":
        variables = tuple(variables)
        if name not in variables:
            raise MissingVariable(f"{name!r} is not in the variable universe")
        i = variables.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(variables)))
        return MultiPoly(variables, {exps: 1})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        """Terms in descending monomial order (leading term first)."""
        return sorted(self.terms.items(), key=_grlex, reverse=True)

    def leading(self) -> tuple[Exponents, int]:
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        return max(self.terms.items(), key=_grlex)

    def total_degree(self) -> int:
        """Largest term degree; 0 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.variables != other.variables:
            raise VariableUniverseMismatch(
                f"universes differ: {self.variables} vs {other.variables}"
            )

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            new = out.get(exps, 0) + coeff
            if new:
                out[exps] = new
            else:
                out.pop(exps, None)
        return MultiPoly(self.variables, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Exponents, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                new = out.get(key, 0) + c1 * c2
                if new:
                    out[key] = new
                else:
                    del out[key]
        return MultiPoly(self.variables, out)

    def scale(self, k: int) -> "MultiPoly":
        if k == 0:
            return MultiPoly.zero(self.variables)
        return MultiPoly(self.variables, {e: k * c for e, c in self.terms.items()})

    # -- content and normalization ----------------------------------------

    def content(self) -> int:
        """Positive gcd of all coefficients."""
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no content")
        g = 0
        for c in self.terms.values():
            g = gcd(g, abs(c))
        return g

    def primitive_part(self) -> "MultiPoly":
        """self divided by its content, sign-normalized so the leading term
        is positive."""
        g = self.content()
        _, lead = self.leading()
        if lead < 0:
            g = -g
        return MultiPoly(self.variables, {e: c // g for e, c in self.terms.items()})

    # -- evaluation --------------------------------------------------------

    def eval(self, assignment: Mapping[str, Fraction | int]) -> Fraction:
        """Exact value at a rational point; the assignment must cover every
        variable of the universe (extra keys are ignored)."""
        missing = [v for v in self.variables if v not in assignment]
        if missing:
            raise MissingVariable(f"assignment lacks {', '.join(missing)}")
        point = [Fraction(assignment[v]) for v in self.variables]
        # Clear denominators once so each term is pure integer arithmetic.
        common = 1
        for f in point:
            common = common * f.denominator // gcd(common, f.denominator)
        nums = [f.numerator * (common // f.denominator) for f in point]
        max_exp = [0] * len(self.variables)
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e > max_exp[i]:
                    max_exp[i] = e
        powers = []
        for base, top in zip(nums, max_exp):
            row = [1]
            for _ in range(top):
                row.append(row[-1] * base)
            powers.append(row)
        by_degree: dict[int, int] = {}
        for exps, coeff in self.terms.items():
            value = coeff
            for i, e in enumerate(exps):
                if e:
                    value *= powers[i][e]
            d = sum(exps)
            by_degree[d] = by_degree.get(d, 0) + value
        return sum(
            (Fraction(s, common**d) for d, s in by_degree.items()), Fraction(0)
        )


# --- module-level operation aliases ---------------------------------------


def add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p + q


def sub(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p - q


def mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q


def neg(p: MultiPoly) -> MultiPoly:
    return -p


def scale(p: MultiPoly, k: int) -> MultiPoly:
    return p.scale(k)


def evaluate(p: MultiPoly, assignment: Mapping[str, Fraction | int]) -> Fraction:
    return p.eval(assignment)


def total_degree(p: MultiPoly) -> int:
    return p.total_degree()


def content(p: MultiPoly) -> int:
    return p.content()


def primitive_part(p: MultiPoly) -> MultiPoly:
    return p.primitive_part()


# --- division by a linear form --------------------------------------------


def divide_by_linear(p: MultiPoly, divisor: MultiPoly) -> MultiPoly:
    """Exact quotient p / divisor for a (nonzero) divisor of degree at most
    one, by repeated cancellation of leading terms."""
    p._check(divisor)
    if divisor.is_zero():
        raise ZeroPolynomial("cannot divide by the zero polynomial")
    if divisor.total_degree() > 1:
        raise BadParameters("divisor must be a linear form")
    lead_e, lead_c = divisor.leading()
    quotient: dict[Exponents, int] = {}
    remainder = dict(p.terms)

    def heap_key(exps: Exponents):
        # min-heap ordering that pops the graded-lexicographically largest
        return (-sum(exps), tuple(-x for x in exps), exps)

    heap = [heap_key(e) for e in remainder]
    heapq.heapify(heap)
    while heap:
        top_e = heapq.heappop(heap)[2]
        top_c = remainder.pop(top_e, 0)
        if top_c == 0:
            continue  # stale entry; the key was cancelled earlier
        if any(t < l for t, l in zip(top_e, lead_e)) or top_c % lead_c:
            raise NotDivisible("nonzero remainder in linear division")
        q_exps = tuple(t - l for t, l in zip(top_e, lead_e))
        q_coeff = top_c // lead_c
        quotient[q_exps] = quotient.get(q_exps, 0) + q_coeff
        for d_exps, d_coeff in divisor.terms.items():
            if d_exps == lead_e:
                continue  # the leading part is exactly the popped term
            key = tuple(a + b for a, b in zip(q_exps, d_exps))
            old = remainder.get(key, 0)
            new = old - q_coeff * d_coeff
            if new:
                remainder[key] = new
                if old == 0:
                    heapq.heappush(heap, heap_key(key))
            else:
                remainder.pop(key, None)
    return MultiPoly(p.variables, {e: c for e, c in quotient.items() if c})


# --- the diagonal family --------------------------------------------------


def diagonal_variables(n: int) -> tuple[str, ...]:
    """A1, B1, ..., A{n+1}, B{n+1}: one variable per triangle of the
    diagonal family member with n interior vertices."""
    if n < 0:
        raise BadParameters("n must be nonnegative")
    return tuple(f"{side}{i}" for i in range(1, n + 2) for side in ("A", "B"))


def _check_index(k: int, n: int):
    if not 0 <= k <= n + 1:
        raise IndexOutOfRange(f"index {k} outside [0, {n + 1}]")


def sigma(k: int, n: int) -> MultiPoly:
    """Sum of A_i + B_i for i = 1..k."""
    _check_index(k, n)
    universe = diagonal_variables(n)
    out = MultiPoly.zero(universe)
    for i in range(1, k + 1):
        out = out + MultiPoly.variable(universe, f"A{i}") + MultiPoly.variable(universe, f"B{i}")
    return out


def sigma_bar(k: int, n: int) -> MultiPoly:
    """Sum of A_i + B_i for i = k+1..n+1."""
    _check_index(k, n)
    universe = diagonal_variables(n)
    out = MultiPoly.zero(universe)
    for i in range(k + 1, n + 2):
        out = out + MultiPoly.variable(universe, f"A{i}") + MultiPoly.variable(universe, f"B{i}")
    return out


def L(k: int, n: int) -> MultiPoly:
    """The linear form sigma(k) - sigma_bar(k)."""
    return sigma(k, n) - sigma_bar(k, n)


def L_product(indices: Iterable[int], n: int) -> MultiPoly:
    """Product of the linear forms L_k over the given indices; the empty
    product is the constant 1."""
    out = MultiPoly.constant(diagonal_variables(n), 1)
    for k in indices:
        out = out * L(k, n)
    return out


def diagonal_raw(n: int) -> MultiPoly:
    """The unnormalized area relation of the n-th diagonal family member:

        L_{1..n} - 2 * sum_i A_i * L_{indices 0..n except i-1, i}
                 + 2 * A_{n+1} * L_{1..n-1}
    """
    if n < 1:
        raise BadParameters("the closed form needs n >= 1")
    universe = diagonal_variables(n)
    out = L_product(range(1, n + 1), n)
    for i in range(1, n + 1):
        indices = [k for k in range(n + 1) if k not in (i - 1, i)]
        term = MultiPoly.variable(universe, f"A{i}") * L_product(indices, n)
        out = out - term.scale(2)
    tail = MultiPoly.variable(universe, f"A{n + 1}") * L_product(range(1, n), n)
    return out + tail.scale(2)


def diagonal_with_factor(n: int) -> MultiPoly:
    """The same relation before the linear factor L_{n+1} is removed:

        -L_{0..n} - 2 * sum_j A_j * L_{indices 0..n+1 except j-1, j}

    It equals L(n+1) * diagonal_raw(n).
    """
    if n < 1:
        raise BadParameters("the closed form needs n >= 1")
    universe = diagonal_variables(n)
    out = -L_product(range(n + 1), n)
    for j in range(1, n + 2):
        indices = [k for k in range(n + 2) if k not in (j - 1, j)]
        term = MultiPoly.variable(universe, f"A{j}") * L_product(indices, n)
        out = out - term.scale(2)
    return out


def monsky_diagonal(n: int) -> MultiPoly:
    """The primitive, sign-normalized area relation of the n-th diagonal
    family member; homogeneous of total degree n."""
    return diagonal_raw(n).primitive_part()


# --- serialization --------------------------------------------------------


def poly_to_text(p: MultiPoly) -> str:
    """Canonical text form: signed integer coefficients with explicit "*",
    terms in descending monomial order, e.g. "+2*A1*B2 -1*A2^2"."""
    if p.is_zero():
        return "0"
    chunks = []
    for exps, coeff in p.sorted_terms():
        sign = "+" if coeff > 0 else "-"
        parts = [str(abs(coeff))]
        for name, e in zip(p.variables, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        chunks.append(sign + "*".join(parts))
    return " ".join(chunks)


def poly_from_text(text: str, variables: Iterable[str]) -> MultiPoly:
    variables = tuple(variables)
    out = MultiPoly.zero(variables)
    text = text.strip()
    if text == "0":
        return out
    for chunk in text.split():
        if not chunk or chunk[0] not in "+-":
            raise BadParameters(f"term {chunk!r} must start with an explicit sign")
        sign = 1 if chunk[0] == "+" else -1
        parts = chunk[1:].split("*")
        try:
            coeff = sign * int(parts[0])
        except ValueError as exc:
            raise BadParameters(f"bad coefficient in {chunk!r}") from exc
        term = MultiPoly.constant(variables, coeff)
        for part in parts[1:]:
            name, _, power = part.partition("^")
            if power:
                try:
                    e = int(power)
                except ValueError as exc:
                    raise BadParameters(f"bad exponent in {chunk!r}") from exc
                if e < 1:
                    raise BadParameters(f"bad exponent in {chunk!r}")
            else:
                e = 1
            base = MultiPoly.variable(variables, name)
            for _ in range(e):
                term = term * base
        out = out + term
    return out


def poly_to_jsonable(p: MultiPoly) -> dict:
    return {
        "variables": list(p.variables),
        "terms": [[coeff, list(exps)] for exps, coeff in p.sorted_terms()],
    }


def poly_from_jsonable(obj) -> MultiPoly:
    try:
        variables = tuple(str(v) for v in obj["variables"])
        terms = {}
        for coeff, exps in obj["terms"]:
            terms[tuple(int(e) for e in exps)] = int(coeff)
    except (KeyError, TypeError, ValueError) as exc:
        raise BadParameters(f"malformed polynomial data: {exc}") from exc
    return MultiPoly(variables, terms)
