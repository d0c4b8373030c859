"""Sparse multivariate polynomials over Q, power products and term orderings.

Power products are plain exponent tuples of length n.  Variable indices in
public signatures are 1-based (``i = 1..n``), matching the usual mathematical
convention; exponent tuples are 0-indexed internally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .numeric import QMatrix, rank

PowerProduct = tuple


class InvalidTransformError(ValueError):
    """The coordinate change matrix is singular or has the wrong shape."""


class InvalidSectionError(ValueError):
    """The linear form has zero coefficient on the eliminated variable."""


# ---------------------------------------------------------------------------
# power products


def pp_one(n: int) -> PowerProduct:
    return (0,) * n


def pp_deg(t: PowerProduct) -> int:
    return sum(t)


def pp_max_index(t: PowerProduct) -> int:
    """Largest 1-based index of a variable dividing t; 0 for the empty product."""
    for i in range(len(t) - 1, -1, -1):
        if t[i]:
            return i + 1
    return 0


def pp_mul(s: PowerProduct, t: PowerProduct) -> PowerProduct:
    return tuple(a + b for a, b in zip(s, t))


def pp_divides(s: PowerProduct, t: PowerProduct) -> bool:
    return all(a <= b for a, b in zip(s, t))


def pp_div(s: PowerProduct, t: PowerProduct) -> PowerProduct:
    """s / t, assuming t divides s."""
    return tuple(a - b for a, b in zip(s, t))


def pp_lcm(s: PowerProduct, t: PowerProduct) -> PowerProduct:
    return tuple(max(a, b) for a, b in zip(s, t))


def pp_coprime(s: PowerProduct, t: PowerProduct) -> bool:
    return all(a == 0 or b == 0 for a, b in zip(s, t))


def monomials_of_degree(n: int, d: int) -> Iterator[PowerProduct]:
    """All exponent tuples in n variables of total degree d."""
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


def monomials_up_to_degree(n: int, d: int) -> Iterator[PowerProduct]:
    for k in range(d + 1):
        yield from monomials_of_degree(n, k)


# ---------------------------------------------------------------------------
# term orderings


def _degrevlex_rows(n: int) -> tuple:
    rows = [(1,) * n]
    for k in range(n - 1):
        rows.append(tuple(-1 if i == n - 1 - k else 0 for i in range(n)))
    return tuple(rows)


def _lex_rows(n: int) -> tuple:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class OrderingSpec:
    """A term ordering: named (lex, degrevlex) or defined by an integer matrix.

    Every kind is normalized to comparison rows; ``t1 > t2`` iff
    ``rows @ t1 > rows @ t2`` lexicographically.  Admissibility (full rank,
    first nonzero entry of each column positive scanning rows top-down)
    guarantees a multiplication-compatible total order with 1 minimal.
    """

    kind: str  # "lex" | "degrevlex" | "matrix"
    n: int
    rows: tuple

    def key(self, t: PowerProduct):
        return tuple(sum(r[i] * t[i] for i in range(self.n)) for r in self.rows)

    def compare(self, t1: PowerProduct, t2: PowerProduct) -> int:
        """-1, 0 or 1 as t1 <, ==, > t2."""
        if len(t1) != self.n or len(t2) != self.n:
            raise ValueError("power product dimension mismatch")
        k1, k2 = self.key(t1), self.key(t2)
        return (k1 > k2) - (k1 < k2)

    def sort_descending(self, monomials: Iterable[PowerProduct]) -> list:
        return sorted(monomials, key=self.key, reverse=True)


def lex(n: int) -> OrderingSpec:
    return OrderingSpec("lex", n, _lex_rows(n))


def degrevlex(n: int) -> OrderingSpec:
    return OrderingSpec("degrevlex", n, _degrevlex_rows(n))


def matrix_ordering(rows: Sequence[Sequence[int]]) -> OrderingSpec:
    """Term ordering defined by an integer matrix, validated for admissibility."""
    rows = tuple(tuple(int(x) for x in row) for row in rows)
    if not rows:
        raise ValueError("empty ordering matrix")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise ValueError("ragged ordering matrix")
    if rank(QMatrix(rows)) != n:
        raise ValueError("ordering matrix must have rank n")
    for j in range(n):
        lead = next((row[j] for row in rows if row[j] != 0), 0)
        if lead <= 0:
            raise ValueError("first nonzero entry of column %d must be positive" % (j + 1))
    return OrderingSpec("matrix", n, rows)


def restrict_ordering(ordering: OrderingSpec, i: int) -> OrderingSpec:
    """The restriction to power products in the variables other than x_i.

    For matrix orderings column i is deleted (zero rows dropped), which agrees
    with the original ordering on every pair of x_i-free power products.
    """
    if not 1 <= i <= ordering.n:
        raise ValueError("variable index out of range")
    if ordering.kind == "lex":
        return lex(ordering.n - 1)
    if ordering.kind == "degrevlex":
        return degrevlex(ordering.n - 1)
    rows = []
    for row in ordering.rows:
        cut = row[: i - 1] + row[i:]
        if any(cut):
            rows.append(cut)
    return matrix_ordering(rows)


def is_degree_compatible_upto(ordering: OrderingSpec, d: int) -> bool:
    """True iff deg(t) > deg(t') implies t > t' for all degrees up to d."""
    n = ordering.n
    for k in range(d):
        top_low = max(ordering.key(t) for t in monomials_of_degree(n, k))
        bottom_high = min(ordering.key(t) for t in monomials_of_degree(n, k + 1))
        if not bottom_high > top_low:
            return False
    return True


def is_xi_degrev_type(ordering: OrderingSpec, i: int, degree_bound: int) -> bool:
    """Bounded decision procedure for x_i-DegRev-type orderings.

    Checks, for all power products of degree <= degree_bound, that the
    ordering is degree-compatible and that among equal-degree products a
    smaller x_i-exponent always wins.
    """
    if not 1 <= i <= ordering.n:
        raise ValueError("variable index out of range")
    if degree_bound < 1:
        raise ValueError("degree bound must be >= 1")
    if not is_degree_compatible_upto(ordering, degree_bound):
        return False
    for k in range(1, degree_bound + 1):
        ordered = ordering.sort_descending(monomials_of_degree(ordering.n, k))
        exps = [t[i - 1] for t in ordered]
        if any(a > b for a, b in zip(exps, exps[1:])):
            return False
    return True


# ---------------------------------------------------------------------------
# linear forms


@dataclass(frozen=True)
class LinearForm:
    """A homogeneous degree-1 form sum(c_i * x_i) given by its coefficients."""

    coeffs: tuple

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def as_polynomial(self) -> "Polynomial":
        n = self.n
        terms = {}
        for i, c in enumerate(self.coeffs):
            if c:
                e = tuple(int(j == i) for j in range(n))
                terms[e] = c
        return Polynomial(n, terms)

    def transformed(self, g: QMatrix) -> "LinearForm":
        """Image under the coordinate change x_j -> sum_i g[i][j] x_i."""
        if g.rows != self.n or g.cols != self.n:
            raise InvalidTransformError("matrix size does not match form")
        return LinearForm(g.matvec(self.coeffs))

    def truncated(self, k: int) -> "LinearForm":
        """Drop all coefficients beyond the first k variables."""
        return LinearForm(self.coeffs[:k])


def linear_form(coeffs: Iterable) -> LinearForm:
    return LinearForm(tuple(Fraction(c) for c in coeffs))


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Sparse polynomial: finite map from exponent tuple to nonzero Fraction."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    if len(e) != n:
                        raise ValueError("exponent tuple of wrong length")
                    clean[tuple(e)] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    @classmethod
    def constant(cls, n: int, c) -> "Polynomial":
        return cls(n, {pp_one(n): Fraction(c)})

    @classmethod
    def monomial(cls, n: int, exps: PowerProduct, coeff=1) -> "Polynomial":
        return cls(n, {tuple(exps): Fraction(coeff)})

    @classmethod
    def variable(cls, n: int, i: int) -> "Polynomial":
        """The variable x_i (1-based)."""
        return cls.monomial(n, tuple(int(j == i - 1) for j in range(n)))

    # -- basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((pp_deg(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {pp_deg(e) for e in self.terms}
        return len(degrees) <= 1

    def leading_term(self, ordering: OrderingSpec) -> tuple:
        """(exponent, coefficient) of the greatest term; raises on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=ordering.key)
        return e, self.terms[e]

    def monic(self, ordering: OrderingSpec) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading_term(ordering)
        return self * (Fraction(1) / c)

    def coefficient(self, e: PowerProduct) -> Fraction:
        return self.terms.get(tuple(e), Fraction(0))

    # -- arithmetic

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial(self.n, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) - c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial(self.n, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            out = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = pp_mul(e1, e2)
                    v = out.get(e, 0) + c1 * c2
                    if v:
                        out[e] = v
                    else:
                        out.pop(e, None)
            return Polynomial(self.n, out)
        return Polynomial(self.n, {e: c * Fraction(other) for e, c in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.n, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.n == other.n and self.terms == other.terms

    def __repr__(self) -> str:
        names = default_variable_names(self.n)
        return "Polynomial(%s)" % poly_to_string(self, names, degrevlex(self.n))

    def evaluate(self, values: Sequence) -> Fraction:
        vals = [Fraction(v) for v in values]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, a in zip(vals, e):
                if a:
                    term *= v**a
            total += term
        return total


# ---------------------------------------------------------------------------
# substitution


def _expand_through(f: Polynomial, images: Sequence[Polynomial], target_n: int) -> Polynomial:
    """Substitute x_j -> images[j] (0-based) into f, expanding products."""
    powers = [{0: Polynomial.constant(target_n, 1)} for _ in range(f.n)]

    def power(j: int, k: int) -> Polynomial:
        cache = powers[j]
        if k not in cache:
            top = max(cache)
            acc = cache[top]
            for e in range(top + 1, k + 1):
                acc = acc * images[j]
                cache[e] = acc
        return cache[k]

    result = Polynomial.zero(target_n)
    for e, c in f.terms.items():
        term = Polynomial.constant(target_n, c)
        for j, a in enumerate(e):
            if a:
                term = term * power(j, a)
        result = result + term
    return result


def apply_linear_change(f: Polynomial, g: QMatrix) -> Polynomial:
    """Apply the coordinate change x_j -> sum_i g[i][j] x_i and expand."""
    n = f.n
    if g.rows != n or g.cols != n:
        raise InvalidTransformError("matrix size does not match ring dimension")
    if not g.is_invertible():
        raise InvalidTransformError("coordinate change matrix is singular")
    images = [
        Polynomial(n, {tuple(int(r == i) for r in range(n)): g[i, j] for i in range(n) if g[i, j]})
        for j in range(n)
    ]
    return _expand_through(f, images, n)


def substitute_variable(f: Polynomial, i: int, h: LinearForm) -> Polynomial:
    """Eliminate x_i via the hyperplane h: x_i -> -(1/h_i) * sum_{j != i} h_j x_j.

    Returns the image in the (n-1)-variable ring; the other variables map
    identically (reindexed past i).
    """
    n = f.n
    if h.n != n:
        raise InvalidSectionError("linear form dimension mismatch")
    if not 1 <= i <= n:
        raise ValueError("variable index out of range")
    hi = h.coeffs[i - 1]
    if hi == 0:
        raise InvalidSectionError("coefficient of the eliminated variable is zero")
    m = n - 1
    images = []
    for j in range(n):
        if j == i - 1:
            terms = {}
            for k in range(n):
                if k == i - 1 or h.coeffs[k] == 0:
                    continue
                pos = k if k < i - 1 else k - 1
                terms[tuple(int(r == pos) for r in range(m))] = -h.coeffs[k] / hi
            images.append(Polynomial(m, terms))
        else:
            pos = j if j < i - 1 else j - 1
            images.append(Polynomial.variable(m, pos + 1))
    return _expand_through(f, images, m)


# ---------------------------------------------------------------------------
# printing


def default_variable_names(n: int) -> list:
    return ["x%d" % (i + 1) for i in range(n)]


def _format_monomial(e: PowerProduct, names: Sequence[str]) -> str:
    parts = []
    for i, a in enumerate(e):
        if a == 1:
            parts.append(names[i])
        elif a > 1:
            parts.append("%s^%d" % (names[i], a))
    return "*".join(parts)


def poly_to_string(f: Polynomial, names: Sequence[str], ordering: OrderingSpec) -> str:
    """Canonical printing with terms sorted descending by the given ordering."""
    if f.is_zero():
        return "0"
    pieces = []
    for e in ordering.sort_descending(f.terms):
        c = f.terms[e]
        mono = _format_monomial(e, names)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = "%s*%s" % (mag, mono)
        if not pieces:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces)
