"""Euler characteristics of symmetric products, quotients of cartesian
powers, and bounded-multiplicity configuration spaces.

All functions take the Euler characteristic chi of the base space as a plain
integer and return exact integers.  The functions for ordered/unordered fat
diagonals (multiplicity >= d loci) and their complements are only valid for
closed even-dimensional manifolds; they check a parity argument and raise
UnsupportedSpaceError otherwise, because on general complexes these numbers
are not functions of chi at all.

Conventions:

  sp(X, n)       n-th symmetric product, the quotient of X^n by the full
                 symmetric group
  fat_o(X, n, d) ordered points in X^n with some value repeated >= d times
  fat_u(X, n, d) its image in sp(X, n)
  cap(X, n, d)   complement sp(X, n) - fat_u(X, n, d+1): unordered n-tuples
                 where no value has multiplicity > d

Two independent oracles recompute the fat-diagonal answers by exhaustive
enumeration (set partitions, and a cycle-type average) so the closed
formulas never stand alone.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .algebra import binomial_gen, falling_factorial
from .combinatorics import (
    AlphaSequence,
    alpha_sequences,
    count_set_partitions_of_type,
    set_partitions_cached,
)
from .errors import InternalConsistencyError, UnsupportedSpaceError, check_guard
from .permgroup import PermutationGroupModel, conjugacy_classes_sn

MAX_ORACLE_N = 10


def _require_even(parity: str, what: str) -> None:
    if parity != "even":
        raise UnsupportedSpaceError(
            f"{what} is only defined over closed even-dimensional manifolds;"
            f" got parity {parity!r}"
        )


def _as_exact_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise InternalConsistencyError(f"{what}: non-integral value {value}")
    return int(value)


def chi_sp(chi: int, n: int) -> int:
    """Euler characteristic of the n-th symmetric product.

    Equals binomial_gen(chi + n - 1, n), the coefficient of q^n in
    (1 - q)^(-chi); valid for any integer chi.

    >>> chi_sp(2, 4)
    5
    >>> chi_sp(0, 3)
    0
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return binomial_gen(chi + n - 1, n)


def chi_gamma_product(chi: int, group: PermutationGroupModel) -> int:
    """Euler characteristic of the quotient of X^n by a permutation group.

    Average of chi^(number of cycles) over the group; the average is always
    an exact integer, and a failure of that is a bug.

    >>> from .permgroup import cyclic_group
    >>> chi_gamma_product(2, cyclic_group(3))
    4
    """
    total = 0
    for cycle_count, elements in group.cycle_count_histogram().items():
        total += elements * chi**cycle_count
    return _as_exact_int(Fraction(total, group.order()), "chi_gamma_product")


def chi_f_config(chi: int, k: int, parity: str) -> int:
    """Euler characteristic of the ordered configuration space of k distinct
    points in a closed manifold: prod_{j=0}^{k-1} (chi - j) in even dimension,
    prod (chi + j) in odd dimension.

    >>> chi_f_config(2, 2, "even")
    2
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if parity == "even":
        sign = -1
    elif parity == "odd":
        sign = 1
    else:
        raise UnsupportedSpaceError(
            f"configuration-space formula needs a manifold parity, got {parity!r}"
        )
    out = 1
    for j in range(k):
        out *= chi + sign * j
    return out


def chi_stratum(chi: int, alpha: AlphaSequence) -> int:
    """Euler characteristic of one multiplicity stratum of the symmetric
    product: unordered collections of sum(alpha_i) distinct points, alpha_i
    of them carrying multiplicity i.

    Equals falling_factorial(chi, sum(alpha_i)) / prod(alpha_i!); the
    division is exact.  Valid over closed even-dimensional manifolds.
    """
    k = alpha.num_blocks
    value = Fraction(falling_factorial(chi, k), alpha.factorial_product())
    return _as_exact_int(value, f"chi_stratum({chi}, {alpha.parts})")


def chi_fd(chi: int, n: int, d: int, parity: str = "even") -> int:
    """Euler characteristic of the ordered fat diagonal: n-tuples in which
    some value occurs at least d times.  Even-dimensional closed manifolds.

    chi^n minus the multiplicity-bounded complement, summed over
    multiplicity vectors with parts < d; each vector is weighted by the
    number of set partitions realizing it.  (The unweighted sum is wrong for
    d >= 3: it breaks the thin-diagonal identity chi_fd(chi, n, n) = chi.)

    >>> chi_fd(2, 3, 2)
    8
    >>> chi_fd(2, 4, 3)
    10
    """
    _require_even(parity, "ordered fat diagonal")
    if not 2 <= d <= n:
        raise ValueError(f"needs 2 <= d <= n, got d={d}, n={n}")
    total = chi**n
    for alpha in alpha_sequences(n, d - 1):
        weight = count_set_partitions_of_type(alpha)
        total -= weight * falling_factorial(chi, alpha.num_blocks)
    return total


def chi_bd(chi: int, n: int, d: int, parity: str = "even") -> int:
    """Euler characteristic of the unordered fat diagonal: points of the
    n-th symmetric product where some value has multiplicity >= d.  Even-
    dimensional closed manifolds.

    >>> chi_bd(2, 4, 2)
    5
    >>> chi_bd(2, 5, 2)
    6
    """
    _require_even(parity, "unordered fat diagonal")
    if not 2 <= d <= n:
        raise ValueError(f"needs 2 <= d <= n, got d={d}, n={n}")
    total = Fraction(chi_sp(chi, n))
    for alpha in alpha_sequences(n, d - 1):
        total -= Fraction(
            falling_factorial(chi, alpha.num_blocks), alpha.factorial_product()
        )
    return _as_exact_int(total, f"chi_bd({chi}, {n}, {d})")


def chi_f2(chi: int, n: int) -> int:
    """Closed form for the ordered fat diagonal at d = 2: chi^n minus the
    configuration-space product.  Needs no parity assumption.

    >>> chi_f2(2, 3)
    8
    """
    if n < 2:
        raise ValueError(f"needs n >= 2, got {n}")
    return chi**n - falling_factorial(chi, n)


def chi_b2(chi: int, n: int) -> int:
    """Closed form for the unordered fat diagonal at d = 2.

    >>> chi_b2(2, 4)
    5
    """
    if n < 2:
        raise ValueError(f"needs n >= 2, got {n}")
    value = Fraction(chi_sp(chi, n)) - Fraction(
        falling_factorial(chi, n), math.factorial(n)
    )
    return _as_exact_int(value, f"chi_b2({chi}, {n})")


def chi_b_upper(chi: int, n: int, d: int, parity: str = "even") -> int:
    """Euler characteristic of the multiplicity-at-most-d part of the n-th
    symmetric product.  Even-dimensional closed manifolds only; for general
    complexes this is not a function of chi.

    Sum of the strata with all multiplicities <= d.

    >>> chi_b_upper(2, 2, 1)
    1
    >>> chi_b_upper(2, 3, 2)
    2
    """
    _require_even(parity, "multiplicity-bounded symmetric product")
    if not 1 <= d <= n:
        raise ValueError(f"needs 1 <= d <= n, got d={d}, n={n}")
    total = Fraction(0)
    for alpha in alpha_sequences(n, d):
        total += Fraction(
            falling_factorial(chi, alpha.num_blocks), alpha.factorial_product()
        )
    return _as_exact_int(total, f"chi_b_upper({chi}, {n}, {d})")


def stratification_sum_bd(chi: int, n: int, d: int) -> int:
    """Recompute chi_bd as the direct sum of its strata: multiplicity
    vectors of weight n whose largest used part is >= d.  Used as a
    cross-check of the closed formula."""
    if not 2 <= d <= n:
        raise ValueError(f"needs 2 <= d <= n, got d={d}, n={n}")
    total = 0
    for alpha in alpha_sequences(n, n):
        if any(alpha.parts[i] for i in range(d - 1, n)):
            total += chi_stratum(chi, alpha)
    return total


def oracle_fd_setpartitions(chi: int, n: int, d: int) -> int:
    """Independent oracle for chi_fd by exhaustive enumeration: sum over all
    set partitions of the n coordinates having a block of size >= d of the
    configuration-space count falling_factorial(chi, #blocks).

    >>> oracle_fd_setpartitions(2, 3, 2)
    8
    """
    check_guard(n, MAX_ORACLE_N, "oracle_fd_setpartitions")
    if not 2 <= d <= n:
        raise ValueError(f"needs 2 <= d <= n, got d={d}, n={n}")
    total = 0
    for part in set_partitions_cached(n):
        if part.max_block_size() >= d:
            total += falling_factorial(chi, part.num_blocks)
    return total


def oracle_bd_burnside(chi: int, n: int, d: int) -> int:
    """Independent oracle for chi_bd: average over the symmetric group of
    the Euler characteristic of the fixed ordered fat diagonal.

    An element with cycle type of c cycles fixes a copy of X^c whose
    coordinates carry the cycle lengths as weights; its fat part sums, over
    set partitions of the cycle set with some block of total weight >= d,
    the counts falling_factorial(chi, #blocks).  The class-weighted average
    is asserted integral.

    >>> oracle_bd_burnside(2, 5, 3)
    6
    """
    check_guard(n, MAX_ORACLE_N, "oracle_bd_burnside")
    if not 2 <= d <= n:
        raise ValueError(f"needs 2 <= d <= n, got d={d}, n={n}")
    total = 0
    for ctype, class_size in conjugacy_classes_sn(n):
        weights = ctype.cycle_lengths()
        c = len(weights)
        fixed = 0
        for part in set_partitions_cached(c):
            heaviest = max(sum(weights[i] for i in block) for block in part.blocks)
            if heaviest >= d:
                fixed += falling_factorial(chi, part.num_blocks)
        total += class_size * fixed
    return _as_exact_int(
        Fraction(total, math.factorial(n)), f"oracle_bd_burnside({chi}, {n}, {d})"
    )
