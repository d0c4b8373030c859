"""Randomized generic initial ideals and hyperplane sections.

The generic initial ideal is approximated by Monte Carlo: several independent
random invertible integer coordinate changes are applied and the initial
ideals compared.  Unanimity across trials plus a strong-stability sanity
check make silent wrong answers very unlikely; disagreement surfaces loudly.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from .groebner import PolyIdeal
from .monomial import MonomialIdeal, stability_flags
from .numeric import QMatrix
from .polyring import (
    LinearForm,
    OrderingSpec,
    apply_linear_change,
    linear_form,
    substitute_variable,
)

COEFF_BOUND = 1000
DEFAULT_TRIALS = 3


class AmbiguousGinError(RuntimeError):
    """No strict majority across the random trials; raise the trial count."""


@dataclass(frozen=True)
class GinResult:
    """Outcome of a randomized generic-initial-ideal computation.

    ``agreed`` is True iff every trial produced the identical monomial ideal;
    ``ideal`` is the majority value.  ``suspicious`` flags a result that fails
    the strong-stability sanity check (over Q the generic initial ideal is
    Borel-fixed, hence strongly stable).
    """

    ideal: MonomialIdeal
    trials_used: int
    agreed: bool
    seeds: tuple
    suspicious: bool = False


def _random_invertible(rng: random.Random, n: int, bound: int) -> QMatrix:
    while True:
        g = QMatrix([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])
        if g.is_invertible():
            return g


def gin(
    I: PolyIdeal,
    ordering: OrderingSpec,
    trials: int = DEFAULT_TRIALS,
    rng_seed: int = 0,
    bound: int = COEFF_BOUND,
) -> GinResult:
    """Randomized generic initial ideal of a nonzero homogeneous ideal."""
    if I.is_zero():
        raise ValueError("the zero ideal has no generic initial ideal")
    if not I.homogeneous:
        raise ValueError("gin requires a homogeneous ideal")
    if trials < 2:
        raise ValueError("at least two trials are required")
    master = random.Random(rng_seed)
    trial_seeds = tuple(master.randrange(1 << 32) for _ in range(trials))
    results = []
    for ts in trial_seeds:
        rng = random.Random(ts)
        g = _random_invertible(rng, I.n, bound)
        moved = PolyIdeal([apply_linear_change(f, g) for f in I.generators], n=I.n)
        results.append(moved.initial_ideal(ordering))
    counts = Counter(results)
    ranked = counts.most_common()
    if len(ranked) > 1 and ranked[0][1] == ranked[1][1]:
        raise AmbiguousGinError(
            "no majority over %d trials (seed %d); raise the trial count" % (trials, rng_seed)
        )
    ideal = ranked[0][0]
    agreed = len(ranked) == 1
    suspicious = agreed and not stability_flags(ideal)[1]
    return GinResult(ideal, trials, agreed, trial_seeds, suspicious)


def hyperplane_section(I: PolyIdeal, h: LinearForm, i: int) -> PolyIdeal:
    """The h-hyperplane section: image of I under the map eliminating x_i.

    The substitution is surjective, so the images of the generators generate
    the image ideal in the (n-1)-variable ring.
    """
    if h.n != I.n:
        raise ValueError("linear form dimension mismatch")
    images = [substitute_variable(g, i, h) for g in I.generators]
    return PolyIdeal([f for f in images if not f.is_zero()], n=I.n - 1)


def coordinate_form(n: int, i: int) -> LinearForm:
    """The linear form x_i, whose section sets x_i to zero."""
    return linear_form([int(j == i - 1) for j in range(n)])


def random_linear_form(n: int, rng_seed: int, bound: int = COEFF_BOUND) -> LinearForm:
    """A random form with all coefficients nonzero integers in [-bound, bound]."""
    rng = random.Random(rng_seed)
    coeffs = []
    for _ in range(n):
        c = 0
        while c == 0:
            c = rng.randint(-bound, bound)
        coeffs.append(c)
    return linear_form(coeffs)
