import random
from fractions import Fraction

import pytest
import sympy

from ginforge.distraction import (
    DistractionMatrix,
    MatrixConstructionError,
    distract_ideal,
    distract_term,
    intersection_of_primes,
    is_radical_for,
    is_sufficiently_generic,
    make_matrix,
    radirred_primes,
    restrict_matrix,
    transform_matrix,
)
from ginforge.groebner import PolyIdeal, ideal_equal, initial_ideal, intersect, saturate
from ginforge.monomial import MonomialIdeal, hilbert, intersect_mono, saturate_mono
from ginforge.numeric import QMatrix
from ginforge.polyring import Polynomial, apply_linear_change, degrevlex, linear_form
from oracles import poly_divides

DRL3 = degrevlex(3)
DRL4 = degrevlex(4)


def _sympy_expand(products, n):
    """Expand a product of linear forms with sympy and return a term dict."""
    xs = sympy.symbols("s0:%d" % n)
    expr = sympy.expand(sympy.prod([sum(c * x for c, x in zip(form, xs)) for form in products], start=sympy.Integer(1)))
    poly = sympy.Poly(expr, *xs)
    return {tuple(int(e) for e in mono): Fraction(str(c)) for mono, c in poly.terms()}


def test_identical_matrix_is_identity_operator():
    L = make_matrix("identical", 3, 4)
    for t in [(2, 0, 1), (0, 3, 0), (1, 1, 1)]:
        assert distract_term(L, t) == Polynomial.monomial(3, t)


def test_classic_matrix_entries():
    L = make_matrix("classic", 4, 6)
    expected_row1 = [(1, 0, 0, 0), (1, 0, 0, -1), (1, 0, 0, -2), (1, 0, 0, -3), (1, 0, 0, -4)]
    for j, coeffs in enumerate(expected_row1, start=1):
        assert L.entry(1, j) == linear_form(coeffs)
    assert L.entry(1, 6) == linear_form((1, 0, 0, 0))  # tail
    assert L.entry(1, 9) == linear_form((1, 0, 0, 0))
    for j in range(1, 8):
        assert L.entry(4, j) == linear_form((0, 0, 0, 1))


def test_generic_matrix_deterministic_and_valid():
    L1 = make_matrix("generic", 3, 2, rng_seed=42)
    L2 = make_matrix("generic", 3, 2, rng_seed=42)
    assert L1 == L2
    assert make_matrix("generic", 3, 2, rng_seed=43) != L1


def test_generic_requires_seed():
    with pytest.raises(MatrixConstructionError):
        make_matrix("generic", 3, 2)


def test_distract_pure_power_matches_sympy():
    L = make_matrix("classic", 4, 6)
    # x^5 -> x(x-w)(x-2w)(x-3w)(x-4w)
    forms = [[1, 0, 0, -j] for j in range(5)]
    assert distract_term(L, (5, 0, 0, 0)).terms == _sympy_expand(forms, 4)
    # x^3 y^2 -> x(x-w)(x-2w) y(y-w)
    forms = [[1, 0, 0, 0], [1, 0, 0, -1], [1, 0, 0, -2], [0, 1, 0, 0], [0, 1, 0, -1]]
    assert distract_term(L, (3, 2, 0, 0)).terms == _sympy_expand(forms, 4)


def test_distract_one_is_one():
    L = make_matrix("classic", 3, 3)
    assert distract_term(L, (0, 0, 0)) == Polynomial.constant(3, 1)


def test_distract_ideal_identical_is_inclusion():
    I = MonomialIdeal(3, [(2, 0, 0), (0, 1, 1)])
    D = distract_ideal(make_matrix("identical", 3, 2), I)
    assert ideal_equal(D, PolyIdeal.from_monomial(I), DRL3)


def test_distraction_preserves_hilbert_function():
    I = MonomialIdeal(4, [(5, 0, 0, 0), (4, 1, 0, 0), (4, 0, 1, 0), (3, 2, 0, 0), (2, 3, 0, 0)])
    D = distract_ideal(make_matrix("classic", 4, 6), I)
    assert hilbert(initial_ideal(D, DRL4), 6) == hilbert(I, 6)


def test_divisibility_is_preserved():
    rng = random.Random(21)
    L = make_matrix("classic", 3, 5)
    G = make_matrix("generic", 3, 3, rng_seed=5)
    for _ in range(10):
        t1 = tuple(rng.randint(0, 2) for _ in range(3))
        extra = tuple(rng.randint(0, 2) for _ in range(3))
        t2 = tuple(a + b for a, b in zip(t1, extra))
        for M in (L, G):
            assert poly_divides(distract_term(M, t1), distract_term(M, t2), DRL3)


def test_distraction_is_not_multiplicative():
    L = make_matrix("classic", 2, 3)
    x1 = (1, 0)
    product = distract_term(L, x1) * distract_term(L, x1)
    assert distract_term(L, (2, 0)) != product


def test_distraction_commutes_with_intersection_and_sum():
    rng = random.Random(31)
    for _ in range(4):
        n = 3
        gens1 = [tuple(rng.randint(0, 2) for _ in range(n)) for _ in range(2)]
        gens2 = [tuple(rng.randint(0, 2) for _ in range(n)) for _ in range(2)]
        gens1 = [g for g in gens1 if any(g)]
        gens2 = [g for g in gens2 if any(g)]
        if not gens1 or not gens2:
            continue
        I, J = MonomialIdeal(n, gens1), MonomialIdeal(n, gens2)
        L = make_matrix("generic", n, 3, rng_seed=rng.randrange(1 << 30))
        left = distract_ideal(L, intersect_mono(I, J))
        right = intersect(distract_ideal(L, I), distract_ideal(L, J))
        assert ideal_equal(left, right, DRL3)
        left_sum = distract_ideal(L, MonomialIdeal(n, I.gens + J.gens))
        right_sum = PolyIdeal(
            list(distract_ideal(L, I).generators) + list(distract_ideal(L, J).generators), n=n
        )
        assert ideal_equal(left_sum, right_sum, DRL3)


def test_distraction_commutes_with_saturation():
    I = MonomialIdeal(3, [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1)])
    L = make_matrix("classic", 3, 3)
    left = distract_ideal(L, saturate_mono(I))
    right = saturate(distract_ideal(L, I))
    assert ideal_equal(left, right, DRL3)


def test_sufficiently_generic_examples():
    assert is_sufficiently_generic(make_matrix("identical", 3, 2))
    assert is_sufficiently_generic(make_matrix("classic", 4, 6))
    # direct span enumeration for the classic matrix in two variables
    L = make_matrix("classic", 2, 3)
    assert is_sufficiently_generic(L)
    swapped = DistractionMatrix(
        [[linear_form((0, 1))] * 2, [linear_form((1, 0))] * 2]
    )
    assert not is_sufficiently_generic(swapped)  # 1x1 minor vanishes


def test_transformed_matrix_is_sufficiently_generic():
    rng = random.Random(9)
    L = make_matrix("classic", 3, 4)
    g = QMatrix([[rng.randint(-10, 10) for _ in range(3)] for _ in range(3)])
    while not g.is_invertible():
        g = QMatrix([[rng.randint(-10, 10) for _ in range(3)] for _ in range(3)])
    assert is_sufficiently_generic(transform_matrix(g, L))


def test_transform_round_trip_and_operator_identity():
    L = make_matrix("classic", 2, 3)
    g = QMatrix([[1, 2], [1, 3]])
    assert transform_matrix(QMatrix.identity(2), L) == L
    assert transform_matrix(g.inverse(), transform_matrix(g, L)) == L
    # applying g after distracting equals distracting by the transformed matrix
    t = (2, 0)
    lhs = apply_linear_change(distract_term(L, t), g)
    rhs = distract_term(transform_matrix(g, L), t)
    assert lhs == rhs


def test_radical_for_verdicts():
    I = MonomialIdeal(3, [(2, 2, 0), (2, 0, 2), (0, 2, 2)])
    assert is_radical_for(make_matrix("generic", 3, 2, rng_seed=1), I)
    assert not is_radical_for(make_matrix("classic", 3, 2), I)
    assert not is_radical_for(make_matrix("identical", 3, 4), MonomialIdeal(2, [(2, 0)]))
    # a linear component has a singleton selection box
    assert is_radical_for(make_matrix("identical", 2, 2), MonomialIdeal(2, [(1, 0), (0, 1)]))


def test_radirred_primes_factorization():
    L = make_matrix("classic", 2, 3)
    primes = radirred_primes(L, MonomialIdeal(2, [(2, 0)]))
    expected = [
        PolyIdeal([linear_form((1, 0)).as_polynomial()]),
        PolyIdeal([linear_form((1, -1)).as_polynomial()]),
    ]
    assert len(primes) == 2
    drl2 = degrevlex(2)
    assert ideal_equal(primes[0], expected[0], drl2)
    assert ideal_equal(primes[1], expected[1], drl2)


def test_radirred_singleton():
    L = make_matrix("classic", 2, 2)
    primes = radirred_primes(L, MonomialIdeal(2, [(1, 0)]))
    assert len(primes) == 1


def test_radirred_intersection_equals_distraction():
    L = make_matrix("classic", 3, 3)
    I = MonomialIdeal(3, [(2, 0, 0), (0, 1, 0)])
    primes = radirred_primes(L, I)
    assert ideal_equal(intersection_of_primes(primes), distract_ideal(L, I), DRL3)


def test_radirred_requires_low_height():
    L = make_matrix("classic", 2, 3)
    with pytest.raises(ValueError):
        radirred_primes(L, MonomialIdeal(2, [(1, 0), (0, 2)]))


def test_restrict_matrix_examples():
    identical = make_matrix("identical", 4, 3)
    assert restrict_matrix(identical, 3) == make_matrix("identical", 2, 3)
    classic = make_matrix("classic", 4, 6)
    assert restrict_matrix(classic, 4) == make_matrix("identical", 3, 6)
    generic = make_matrix("generic", 3, 2, rng_seed=77)
    if is_sufficiently_generic(generic):
        assert is_sufficiently_generic(restrict_matrix(generic, 3))


def test_restrict_matrix_failure_for_degenerate_source():
    # a valid distraction matrix whose truncation loses the span property
    rows = [
        [linear_form((1, 0, 1))] * 2,
        [linear_form((1, 0, -1))] * 2,
        [linear_form((0, 1, 0))] * 2,
    ]
    L = DistractionMatrix(rows)
    with pytest.raises(MatrixConstructionError):
        restrict_matrix(L, 3)


def test_tail_rule_bounds_selection_boxes():
    # exponents above the tail index force repeated spans, hence not radical
    L = make_matrix("generic", 2, 2, rng_seed=3)
    assert not is_radical_for(L, MonomialIdeal(2, [(3, 0), (0, 1)]))
