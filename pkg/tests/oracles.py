"""Independent test oracles.

These deliberately avoid the code paths they are used to check: brute-force
enumeration for Hilbert functions and stability, exact-rank homology of the
Taylor complex for Betti numbers, schoolbook single-divisor division for
divisibility, and a cofactor-expansion determinant.
"""

from fractions import Fraction
from functools import reduce
from itertools import combinations

from ginforge.monomial import MonomialIdeal
from ginforge.numeric import QMatrix, rank
from ginforge.polyring import (
    OrderingSpec,
    Polynomial,
    monomials_of_degree,
    pp_deg,
    pp_div,
    pp_divides,
    pp_lcm,
    pp_max_index,
    pp_mul,
)


def det_expansion(m: QMatrix) -> Fraction:
    """Determinant by cofactor expansion along the first row."""
    n = m.rows
    if n == 0:
        return Fraction(1)
    if n == 1:
        return m[0, 0]
    total = Fraction(0)
    for j in range(n):
        if m[0, j] == 0:
            continue
        minor = m.submatrix(range(1, n), [c for c in range(n) if c != j])
        total += (-1) ** j * m[0, j] * det_expansion(minor)
    return total


def hilbert_by_enumeration(I: MonomialIdeal, d_max: int) -> list:
    values = []
    for d in range(d_max + 1):
        count = 0
        for t in monomials_of_degree(I.n, d):
            if not any(pp_divides(g, t) for g in I.gens):
                count += 1
        values.append(count)
    return values


def hf_by_rank(I, d: int) -> int:
    """HF_{P/I}(d) from the exact rank of the degree-d coefficient matrix of
    the generator multiples (no Groebner machinery)."""
    n = I.n
    mons = list(monomials_of_degree(n, d))
    index = {m: i for i, m in enumerate(mons)}
    rows = []
    for g in I.generators:
        dg = g.degree()
        if dg > d:
            continue
        for m in monomials_of_degree(n, d - dg):
            row = [Fraction(0)] * len(mons)
            for e, c in g.terms.items():
                row[index[pp_mul(e, m)]] += c
            rows.append(row)
    dim_ideal = rank(QMatrix(rows)) if rows else 0
    return len(mons) - dim_ideal


def stability_flags_exhaustive(I: MonomialIdeal, d_max: int) -> tuple:
    """Stability checked on every monomial of the ideal up to degree d_max."""
    stable = sstable = True
    for d in range(d_max + 1):
        for t in monomials_of_degree(I.n, d):
            if not I.contains(t):
                continue
            m = pp_max_index(t)
            for i in range(1, m):
                moved = list(t)
                moved[m - 1] -= 1
                moved[i - 1] += 1
                if not I.contains(tuple(moved)):
                    stable = False
            for j in range(1, I.n + 1):
                if t[j - 1] == 0:
                    continue
                for i in range(1, j):
                    moved = list(t)
                    moved[j - 1] -= 1
                    moved[i - 1] += 1
                    if not I.contains(tuple(moved)):
                        sstable = False
    return stable, sstable


def poly_divides(g: Polynomial, f: Polynomial, ordering: OrderingSpec) -> bool:
    """Schoolbook division by the single polynomial g; True iff g divides f."""
    if f.is_zero():
        return True
    if g.is_zero():
        return False
    glt, glc = g.leading_term(ordering)
    work = dict(f.terms)
    while work:
        e = max(work, key=ordering.key)
        if not pp_divides(glt, e):
            return False
        c = work.pop(e) / glc
        shift = pp_div(e, glt)
        for m, a in g.terms.items():
            if m == glt:
                continue
            mm = pp_mul(m, shift)
            v = work.get(mm, 0) - c * a
            if v:
                work[mm] = v
            else:
                work.pop(mm, None)
    return True


def taylor_betti(I: MonomialIdeal) -> dict:
    """Graded Betti numbers of I from the Taylor complex.

    The complex is restricted per multidegree; entries of the reduced
    differential are +-1 exactly where the lcm is unchanged, and homology
    ranks are computed by exact row reduction.  Faces of size k give
    homological index k-1 for the ideal.
    """
    gens = list(I.gens)
    r = len(gens)
    by_multidegree: dict = {}
    for size in range(1, r + 1):
        for face in combinations(range(r), size):
            a = reduce(pp_lcm, (gens[k] for k in face))
            by_multidegree.setdefault(a, []).append(face)
    table: dict = {}
    for a, faces in by_multidegree.items():
        by_size: dict = {}
        for face in faces:
            by_size.setdefault(len(face), []).append(face)
        ranks: dict = {}
        for k, source in by_size.items():
            target = by_size.get(k - 1, [])
            if not target:
                ranks[k] = 0
                continue
            tindex = {f: i for i, f in enumerate(target)}
            rows = []
            for f in source:
                row = [0] * len(target)
                for pos in range(k):
                    sub = f[:pos] + f[pos + 1 :]
                    if sub in tindex:
                        row[tindex[sub]] += (-1) ** pos
                rows.append(row)
            ranks[k] = rank(QMatrix(rows))
        j = pp_deg(a)
        for k, source in by_size.items():
            homology = len(source) - ranks.get(k, 0) - ranks.get(k + 1, 0)
            if homology:
                key = (k - 1, j)
                table[key] = table.get(key, 0) + homology
    return table
