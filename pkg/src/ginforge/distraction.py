"""Distraction matrices and the distraction operator on terms and ideals.

A distraction matrix assigns to each variable a row of linear forms, eventually
constant (the tail), such that picking one form from each row always spans the
degree-1 part of the ring.  The distraction of a term x_1^{a_1}..x_n^{a_n} is
the product over i of the first a_i forms of row i; it extends to monomial
ideals generator-wise.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Iterable

from .groebner import PolyIdeal, intersect
from .monomial import MonomialIdeal, irreducible_decomposition
from .numeric import QMatrix, row_space_canonical
from .polyring import LinearForm, Polynomial, linear_form

GENERIC_COEFF_BOUND = 1000
GENERIC_REDRAW_LIMIT = 20


class MatrixConstructionError(ValueError):
    """Construction or validation of a distraction matrix failed."""


class DistractionMatrix:
    """n rows of N linear forms with the tail rule L[i][j] = L[i][N] for j > N.

    Stored rows are validated at construction: every choice of one form per
    row spans the degree-1 part (the tail rule makes the finitely many stored
    columns cover all infinite selections).
    """

    __slots__ = ("n", "N", "rows", "kind")

    def __init__(self, rows: Iterable[Iterable[LinearForm]], kind: str = "custom"):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise MatrixConstructionError("empty distraction matrix")
        n = len(rows)
        N = len(rows[0])
        if any(len(r) != N for r in rows):
            raise MatrixConstructionError("ragged rows")
        for r in rows:
            for form in r:
                if form.n != n:
                    raise MatrixConstructionError("linear form of wrong dimension")
        if not _spans_everywhere(rows, n, N):
            raise MatrixConstructionError("some selection of one form per row does not span")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "kind", kind)

    def __setattr__(self, name, value):
        raise AttributeError("DistractionMatrix is immutable")

    def entry(self, i: int, j: int) -> LinearForm:
        """L[i][j] with 1-based indices; columns beyond N repeat column N."""
        return self.rows[i - 1][min(j, self.N) - 1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DistractionMatrix)
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return "DistractionMatrix(kind=%r, n=%d, N=%d)" % (self.kind, self.n, self.N)


def _selection_matrix(forms: Iterable[LinearForm]) -> QMatrix:
    # column r holds the coefficients of the r-th selected form
    cols = [f.coeffs for f in forms]
    return QMatrix(zip(*cols))


def _spans_everywhere(rows, n: int, N: int) -> bool:
    for choice in product(range(N), repeat=n):
        forms = [rows[i][choice[i]] for i in range(n)]
        if _selection_matrix(forms).det() == 0:
            return False
    return True


def make_matrix(
    kind: str,
    n: int,
    N: int,
    rng_seed: int | None = None,
    bound: int = GENERIC_COEFF_BOUND,
) -> DistractionMatrix:
    """Build an identical, classic or generic distraction matrix.

    identical: L[i][j] = x_i, the identity operator.
    classic:   L[i][j] = x_i - (j-1) x_n for i < n and j < N, row n constantly
               x_n, tail x_i from column N on.
    generic:   uniform random integer coefficients in [-bound, bound], redrawn
               (at most a fixed number of times) until the span property holds.
    """
    if N < 1:
        raise MatrixConstructionError("tail index must be >= 1")
    if n < 1:
        raise MatrixConstructionError("ring dimension must be >= 1")
    unit = lambda i: linear_form([int(k == i) for k in range(n)])
    if kind == "identical":
        return DistractionMatrix([[unit(i)] * N for i in range(n)], kind="identical")
    if kind == "classic":
        rows = []
        for i in range(n - 1):
            row = []
            for j in range(1, N + 1):
                if j < N:
                    coeffs = [0] * n
                    coeffs[i] = 1
                    coeffs[n - 1] = -(j - 1)
                    row.append(linear_form(coeffs))
                else:
                    row.append(unit(i))
            rows.append(row)
        rows.append([unit(n - 1)] * N)
        return DistractionMatrix(rows, kind="classic")
    if kind == "generic":
        if rng_seed is None:
            raise MatrixConstructionError("a generic matrix requires a seed")
        rng = random.Random(rng_seed)
        for _ in range(GENERIC_REDRAW_LIMIT):
            rows = [
                [linear_form([rng.randint(-bound, bound) for _ in range(n)]) for _ in range(N)]
                for _ in range(n)
            ]
            try:
                return DistractionMatrix(rows, kind="generic")
            except MatrixConstructionError:
                continue
        raise MatrixConstructionError("could not draw a valid generic matrix")
    raise MatrixConstructionError("unknown kind %r" % kind)


def is_sufficiently_generic(L: DistractionMatrix) -> bool:
    """True iff every truncated selection together with the trailing
    coordinates spans degree 1; equivalently, all leading principal minors of
    every selection matrix are invertible."""
    for k in range(1, L.n + 1):
        for choice in product(range(L.N), repeat=k):
            m = QMatrix(
                [[L.rows[r][choice[r]].coeffs[i] for r in range(k)] for i in range(k)]
            )
            if m.det() == 0:
                return False
    return True


def transform_matrix(g: QMatrix, L: DistractionMatrix) -> DistractionMatrix:
    """Apply the coordinate change g to every entry of L."""
    if not g.is_invertible():
        raise MatrixConstructionError("coordinate change matrix is singular")
    rows = [[form.transformed(g) for form in row] for row in L.rows]
    return DistractionMatrix(rows, kind="custom")


def distract_term(L: DistractionMatrix, t) -> Polynomial:
    """Product over variables i of the first t_i forms of row i."""
    n = L.n
    if len(t) != n:
        raise ValueError("power product of wrong dimension")
    result = Polynomial.constant(n, 1)
    for i in range(1, n + 1):
        for j in range(1, t[i - 1] + 1):
            result = result * L.entry(i, j).as_polynomial()
    return result


def distract_ideal(L: DistractionMatrix, I: MonomialIdeal) -> PolyIdeal:
    """Polynomial ideal generated by the distractions of the minimal generators."""
    if I.n != L.n:
        raise ValueError("ideal and matrix live in different rings")
    return PolyIdeal([distract_term(L, t) for t in I.gens], n=L.n)


def is_radical_for(L: DistractionMatrix, I: MonomialIdeal) -> bool:
    """Decide whether L is radical for I.

    For each irreducible component (x_{i_1}^{a_1},..,x_{i_h}^{a_h}) of I, the
    selections indexed by the exponent box must span pairwise distinct
    subspaces (compared via canonical row-echelon forms).
    """
    if I.is_zero() or I.is_unit():
        raise ValueError("radicality is about proper nonzero ideals")
    for component in irreducible_decomposition(I):
        if not _component_spans_distinct(L, component):
            return False
    return True


def _component_data(component: MonomialIdeal) -> list:
    data = []
    for g in component.gens:
        support = [(i + 1, a) for i, a in enumerate(g) if a]
        if len(support) != 1:
            raise ValueError("component is not generated by pure powers")
        data.append(support[0])
    return data


def _component_spans_distinct(L: DistractionMatrix, component: MonomialIdeal) -> bool:
    data = _component_data(component)
    seen = set()
    count = 0
    for choice in product(*[range(1, a + 1) for (_, a) in data]):
        forms = [L.entry(i, s).coeffs for (i, _), s in zip(data, choice)]
        seen.add(row_space_canonical(forms))
        count += 1
    return len(seen) == count


def radirred_primes(L: DistractionMatrix, I: MonomialIdeal) -> list:
    """The linear primes whose intersection is the distraction of an
    irreducible ideal generated by fewer than n pure powers."""
    data = _component_data(I)
    if len(data) >= L.n:
        raise ValueError("component must have height < n")
    if not _component_spans_distinct(L, I):
        raise ValueError("matrix is not radical for this component")
    primes = []
    for choice in product(*[range(1, a + 1) for (_, a) in data]):
        forms = [L.entry(i, s).as_polynomial() for (i, _), s in zip(data, choice)]
        primes.append(PolyIdeal(forms, n=L.n))
    return primes


def restrict_matrix(L: DistractionMatrix, m: int) -> DistractionMatrix:
    """Truncate every form to its first m-1 coordinates.

    For sufficiently generic L the result is again a valid distraction matrix
    over the smaller ring; otherwise validation may fail.
    """
    if not 2 <= m <= L.n:
        raise ValueError("restriction index out of range")
    rows = [[form.truncated(m - 1) for form in L.rows[i]] for i in range(m - 1)]
    kind = "identical" if L.kind == "identical" else "custom"
    try:
        return DistractionMatrix(rows, kind=kind)
    except MatrixConstructionError as exc:
        raise MatrixConstructionError(
            "restriction is not a distraction matrix (source not sufficiently generic): %s" % exc
        ) from exc


def intersection_of_primes(primes: list) -> PolyIdeal:
    """Intersection of a list of polynomial ideals, folded pairwise."""
    if not primes:
        raise ValueError("nothing to intersect")
    result = primes[0]
    for p in primes[1:]:
        result = intersect(result, p)
    return result
