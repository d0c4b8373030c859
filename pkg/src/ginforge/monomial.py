"""Combinatorics of monomial ideals.

Minimal generators, stability predicates and closures, intersection,
saturation, irreducible decomposition, Hilbert functions, Eliahou-Kervaire
Betti tables, closed-form principal stable ideals, and a randomized
Borel-fixedness probe.

The zero ideal (no generators) and the unit ideal (generated by 1) are legal
values; each operation documents its degenerate behavior where relevant.
"""

from __future__ import annotations

import random
from math import comb
from typing import Iterable

from .polyring import (
    PowerProduct,
    degrevlex,
    monomials_of_degree,
    pp_deg,
    pp_div,
    pp_divides,
    pp_lcm,
    pp_max_index,
    pp_mul,
    pp_one,
)

# Betti tables map (homological index, internal degree) -> count; Hilbert
# vectors are HF_{P/I}(0..d_max) as a plain list of counts.
BettiTable = dict
HilbertVector = list


class NotStableError(ValueError):
    """The operation is only defined for stable monomial ideals."""


class DegenerateInputError(ValueError):
    """The input is degenerate for this operation (e.g. the power product 1)."""


class MonomialIdeal:
    """A monomial ideal stored by its canonical minimal generating set.

    Generators are pairwise non-dividing and sorted descending by degrevlex
    (with a lex tie-break), so equality is structural.
    """

    __slots__ = ("n", "gens")

    def __init__(self, n: int, gens: Iterable[PowerProduct] = ()):
        mins = _minimal_generators(gens)
        for t in mins:
            if len(t) != n:
                raise ValueError("generator of wrong dimension")
        if n:
            ordering = degrevlex(n)
            mins.sort(key=lambda t: (ordering.key(t), t), reverse=True)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gens", tuple(mins))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialIdeal) and self.n == other.n and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((self.n, self.gens))

    def __repr__(self) -> str:
        return "MonomialIdeal(n=%d, gens=%r)" % (self.n, list(self.gens))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return bool(self.gens) and self.gens[-1] == pp_one(self.n)

    def is_proper(self) -> bool:
        return not self.is_unit()

    def contains(self, t: PowerProduct) -> bool:
        return any(pp_divides(g, t) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def max_exponent(self) -> int:
        return max((max(g) for g in self.gens), default=0)

    def max_degree(self) -> int:
        return max((pp_deg(g) for g in self.gens), default=0)

    def is_zero_dimensional(self) -> bool:
        """True iff the ideal contains a power of every variable."""
        pure = {pp_max_index(g) for g in self.gens if sum(1 for a in g if a) == 1}
        return all(i + 1 in pure for i in range(self.n))


def _minimal_generators(gens: Iterable[PowerProduct]) -> list:
    gens = sorted(set(tuple(g) for g in gens), key=pp_deg)
    mins = []
    for t in gens:
        if not any(pp_divides(s, t) for s in mins):
            mins.append(t)
    return mins


def minimalize(n: int, gens: Iterable[PowerProduct]) -> MonomialIdeal:
    """Minimal-generator normal form; the empty set gives the zero ideal."""
    return MonomialIdeal(n, gens)


# ---------------------------------------------------------------------------
# stability


def stability_flags(I: MonomialIdeal) -> tuple[bool, bool]:
    """(is_stable, is_strongly_stable).

    Checking elementary moves on the minimal generators suffices: any monomial
    of the ideal is s*u for a generator u, and a move on s*u either acts on
    the cofactor s (staying inside the ideal trivially) or descends to a move
    on u itself.
    """
    is_stable = True
    is_sstable = True
    for t in I.gens:
        m = pp_max_index(t)
        for i in range(1, m):
            moved = list(t)
            moved[m - 1] -= 1
            moved[i - 1] += 1
            if not I.contains(tuple(moved)):
                is_stable = False
        for j in range(1, len(t) + 1):
            if t[j - 1] == 0:
                continue
            for i in range(1, j):
                moved = list(t)
                moved[j - 1] -= 1
                moved[i - 1] += 1
                if not I.contains(tuple(moved)):
                    is_sstable = False
    return is_stable, is_sstable


def _moves(t: PowerProduct, strongly: bool) -> Iterable[PowerProduct]:
    if strongly:
        sources = [j for j in range(1, len(t) + 1) if t[j - 1] > 0]
    else:
        m = pp_max_index(t)
        sources = [m] if m else []
    for j in sources:
        for i in range(1, j):
            moved = list(t)
            moved[j - 1] -= 1
            moved[i - 1] += 1
            yield tuple(moved)


def closure(n: int, seeds: Iterable[PowerProduct], mode: str = "strongly_stable") -> MonomialIdeal:
    """Smallest stable / strongly stable ideal containing the given monomials.

    Breadth-first closure of the seed set under special elementary moves
    (``mode="stable"``) or all elementary moves (``mode="strongly_stable"``),
    then minimalized.  The ideal generated by the move-orbit is closed under
    moves because a move on s*u either acts on s or descends to u.
    """
    if mode not in ("stable", "strongly_stable"):
        raise ValueError("mode must be 'stable' or 'strongly_stable'")
    strongly = mode == "strongly_stable"
    seen = set(tuple(t) for t in seeds)
    if not seen:
        raise ValueError("closure needs a nonempty seed set")
    frontier = list(seen)
    while frontier:
        nxt = []
        for t in frontier:
            for moved in _moves(t, strongly):
                if moved not in seen:
                    seen.add(moved)
                    nxt.append(moved)
        frontier = nxt
    return MonomialIdeal(n, seen)


# ---------------------------------------------------------------------------
# intersection / saturation / decomposition


def intersect_mono(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I cap J via lcms of generator pairs, minimalized."""
    if I.n != J.n:
        raise ValueError("ideals live in different rings")
    if I.is_zero() or J.is_zero():
        return MonomialIdeal(I.n)
    return MonomialIdeal(I.n, (pp_lcm(s, t) for s in I.gens for t in J.gens))


def _saturate_variable(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """I : x_i^infinity, obtained by zeroing the x_i-exponent of every generator."""
    gens = []
    for g in I.gens:
        e = list(g)
        e[i - 1] = 0
        gens.append(tuple(e))
    return MonomialIdeal(I.n, gens)


def saturate_mono(I: MonomialIdeal) -> MonomialIdeal:
    """The saturation I : (x_1,..,x_n)^infinity.

    Computed as the intersection of the single-variable saturations
    I : x_i^infinity; this is the full saturation because every monomial of
    degree n*k is divisible by some x_i^k.  For strongly stable input it
    coincides with I : x_n^infinity.
    """
    if I.is_zero() or I.is_unit():
        return I
    result = _saturate_variable(I, 1)
    for i in range(2, I.n + 1):
        result = intersect_mono(result, _saturate_variable(I, i))
    return result


def irreducible_decomposition(I: MonomialIdeal) -> list[MonomialIdeal]:
    """Irredundant irreducible components of a proper nonzero monomial ideal.

    Splits recursively on a generator t = u*v with coprime nontrivial parts
    (I = (I+(u)) cap (I+(v))), then prunes components containing the
    intersection of the others.
    """
    if I.is_zero() or I.is_unit():
        raise ValueError("decomposition needs a proper nonzero ideal")

    def split(ideal: MonomialIdeal) -> list[MonomialIdeal]:
        for t in ideal.gens:
            support = [i for i, a in enumerate(t) if a]
            if len(support) > 1:
                k = support[0]
                u = tuple(a if i == k else 0 for i, a in enumerate(t))
                v = tuple(0 if i == k else a for i, a in enumerate(t))
                left = MonomialIdeal(ideal.n, ideal.gens + (u,))
                right = MonomialIdeal(ideal.n, ideal.gens + (v,))
                return split(left) + split(right)
        return [ideal]

    components = []
    for c in split(I):
        if c not in components:
            components.append(c)
    # drop any component containing the intersection of the others
    changed = True
    while changed:
        changed = False
        for k in range(len(components)):
            rest = components[:k] + components[k + 1 :]
            if not rest:
                break
            inter = rest[0]
            for other in rest[1:]:
                inter = intersect_mono(inter, other)
            if components[k].contains_ideal(inter):
                components.pop(k)
                changed = True
                break
    return components


# ---------------------------------------------------------------------------
# Hilbert functions and Betti numbers


def hilbert(I: MonomialIdeal, d_max: int) -> HilbertVector:
    """HF_{P/I}(d) for d = 0..d_max: counts of standard monomials per degree."""
    if d_max < 0:
        raise ValueError("degree bound must be >= 0")
    values = []
    for d in range(d_max + 1):
        values.append(sum(1 for t in monomials_of_degree(I.n, d) if not I.contains(t)))
    return values


def ek_betti(I: MonomialIdeal) -> BettiTable:
    """Graded Betti numbers of a stable ideal by the Eliahou-Kervaire formula.

    beta_{i, d+i}(I) = sum over minimal generators u of degree d of
    binomial(m(u) - 1, i), where m(u) is the maximum index of u.
    """
    if not stability_flags(I)[0]:
        raise NotStableError("Eliahou-Kervaire formula requires a stable ideal")
    table: BettiTable = {}
    for u in I.gens:
        d = pp_deg(u)
        m = pp_max_index(u)
        for i in range(m):
            key = (i, d + i)
            table[key] = table.get(key, 0) + comb(m - 1, i)
    return table


def betti_to_hilbert(table: BettiTable, n: int, d_max: int) -> HilbertVector:
    """Hilbert function of P/I from the alternating sum of a Betti table of I."""
    # numerator coefficient at j: 1 at 0, minus sum_i (-1)^i beta_{i,j}
    numerator = {0: 1}
    for (i, j), b in table.items():
        numerator[j] = numerator.get(j, 0) - ((-1) ** i) * b
    values = []
    for d in range(d_max + 1):
        total = 0
        for j, c in numerator.items():
            if d - j >= 0:
                total += c * comb(d - j + n - 1, n - 1)
        values.append(total)
    return values


# ---------------------------------------------------------------------------
# closed forms for principal stable ideals


def _power_ideal_gens(n: int, upto: int, power: int) -> list:
    """Generators of (x_1,..,x_upto)^power inside the n-variable ring."""
    if power == 0:
        return [pp_one(n)]
    gens = []
    for t in monomials_of_degree(upto, power):
        gens.append(t + (0,) * (n - upto))
    return gens


def principal_formulas(t: PowerProduct) -> tuple[MonomialIdeal, MonomialIdeal]:
    """Closed forms attached to the principal stable ideal of t.

    First component: the smallest stable ideal containing t, as
    sum_j x_1^{a_1}..x_{j-1}^{a_{j-1}} (x_1,..,x_j)^{c_j} with
    c_j = sum_{k>=j} a_k.  Second component: its generic initial ideal
    sum_j x_1^{b_j} (x_1,..,x_j)^{c_j} with b_j = sum_{k<j} a_k.
    """
    n = len(t)
    if pp_deg(t) == 0:
        raise DegenerateInputError("the power product 1 has no principal stable ideal")
    stable_gens = []
    gin_gens = []
    for j in range(1, n + 1):
        c_j = sum(t[k] for k in range(j - 1, n))
        b_j = sum(t[k] for k in range(j - 1))
        prefix = tuple(t[k] if k < j - 1 else 0 for k in range(n))
        x1_power = tuple(b_j if k == 0 else 0 for k in range(n))
        for block in _power_ideal_gens(n, j, c_j):
            stable_gens.append(pp_mul(prefix, block))
            gin_gens.append(pp_mul(x1_power, block))
    return MonomialIdeal(n, stable_gens), MonomialIdeal(n, gin_gens)


def sstable_intersection_form(t: PowerProduct) -> MonomialIdeal:
    """The smallest strongly stable ideal containing t as
    cap_{i=1}^n (x_1,..,x_i)^{beta_i} with beta_i = sum_{j<=i} a_j."""
    n = len(t)
    if pp_deg(t) == 0:
        raise DegenerateInputError("the power product 1 is degenerate here")
    result = None
    for i in range(1, n + 1):
        beta = sum(t[: i])
        factor = MonomialIdeal(n, _power_ideal_gens(n, i, beta))
        result = factor if result is None else intersect_mono(result, factor)
    return result


# ---------------------------------------------------------------------------
# helpers used by the gin machinery


def coordinate_section(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """The x_i -> 0 section: generators free of x_i, with that coordinate dropped."""
    gens = [g[: i - 1] + g[i:] for g in I.gens if g[i - 1] == 0]
    return MonomialIdeal(I.n - 1, gens)


def embed(I: MonomialIdeal, extra: int = 1) -> MonomialIdeal:
    """Extension of I to a ring with `extra` more trailing variables."""
    return MonomialIdeal(I.n + extra, (g + (0,) * extra for g in I.gens))


def scale_by(I: MonomialIdeal, t: PowerProduct) -> MonomialIdeal:
    """The ideal t * I."""
    return MonomialIdeal(I.n, (pp_mul(t, g) for g in I.gens))


def borel_probe(I: MonomialIdeal, trials: int, rng_seed: int) -> bool:
    """Probabilistic necessary test of Borel-fixedness.

    Draws `trials` random upper-triangular matrices with unit diagonal and
    integer entries in [-10, 10], and checks that the polynomial ideal
    generated by the transformed generators equals I.
    """
    from .groebner import PolyIdeal, ideal_equal
    from .numeric import QMatrix
    from .polyring import Polynomial, apply_linear_change

    if trials < 1:
        raise ValueError("at least one trial is required")
    if I.is_zero():
        return True
    n = I.n
    rng = random.Random(rng_seed)
    ordering = degrevlex(n)
    base = PolyIdeal.from_monomial(I)
    for _ in range(trials):
        rows = [
            [1 if i == j else (rng.randint(-10, 10) if j > i else 0) for j in range(n)]
            for i in range(n)
        ]
        g = QMatrix(rows)
        moved = PolyIdeal(
            [apply_linear_change(Polynomial.monomial(n, t), g) for t in I.gens],
            n=n,
        )
        if not ideal_equal(moved, base, ordering):
            return False
    return True
