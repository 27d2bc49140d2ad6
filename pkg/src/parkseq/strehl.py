"""Two families of multi-parameter polynomials and their convolution identities.

For a finite index set A and a member a, write ``ylow(A, a)`` for the sum of
y_j over j in A with j <= a, and ``xup(A, a)`` for the sum of x_{a,j} over
j in A with j > a.  The binomial-type family multiplies the main variable by
the linear forms ``z + ylow + xup`` over every member of A except its
maximum; the Sheffer-type family takes the full product over A.  Setting all
x and all y parameters to constants collapses both to the classical
Abel--Rothe polynomials, and evaluating the binomial-type family at all
x = 1 with y set to the car sizes reproduces the parking-sequence count.

Three identities connect the families:

* ``easy``      — (z + ylow(A, max A)) * t_A(z)  ==  z * s_A(z)
* ``sheffer``   — s_A(z+w)  ==  sum over splits L, R of A of s_L(z) * t_R(w)
* ``binomial``  — t_A(z+w)  ==  sum over splits B, C of A of t_B(z) * t_C(w)

All sums inside s_L and t_R are taken relative to the sub-ground-set (L, R),
not to A; with A-relative sums the sheffer identity already fails on {1, 2}.
Each identity can be checked symbolically (canonical expansion, small sets)
or probabilistically (exact big-integer evaluation at seeded random points).
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterable, Literal

from .core import SizesLike, as_car_sizes
from .counting import IndexSet, partitions_into_two
from .poly import (
    ParameterAssignment,
    SparsePolynomial,
    Variable,
    W,
    Z,
    poly,
    x_var,
    y_var,
)

SYMBOLIC_BUDGET = 5
IdentityName = Literal["easy", "sheffer", "binomial"]
_IDENTITIES = ("easy", "sheffer", "binomial")


def _as_index_set(A: IndexSet | Iterable[int]) -> IndexSet:
    return A if isinstance(A, IndexSet) else IndexSet(A)


def x_upper_sum(A: IndexSet | Iterable[int], a: int) -> SparsePolynomial:
    """Linear form summing x_{a,j} over the members j of A beyond a."""
    A = _as_index_set(A)
    if a not in A:
        raise ValueError(f"{a} is not a member of {tuple(A)}")
    return sum((poly(x_var(a, j)) for j in A if j > a), start=poly(0))


def y_lower_sum(A: IndexSet | Iterable[int], a: int) -> SparsePolynomial:
    """Linear form summing y_j over the members j of A up to and including a."""
    A = _as_index_set(A)
    if a not in A:
        raise ValueError(f"{a} is not a member of {tuple(A)}")
    return sum((poly(y_var(j)) for j in A if j <= a), start=poly(0))


def _linear_form(A: IndexSet, a: int, zvar: Variable) -> SparsePolynomial:
    form = poly(zvar)
    for j in A:
        form = form + (poly(y_var(j)) if j <= a else poly(x_var(a, j)))
    return form


@lru_cache(maxsize=None)
def _t_poly_cached(A: IndexSet, zvar: Variable) -> SparsePolynomial:
    if not A:
        return poly(1)
    result = poly(zvar)
    for a in A[:-1]:
        result = result * _linear_form(A, a, zvar)
    return result


@lru_cache(maxsize=None)
def _s_poly_cached(A: IndexSet, zvar: Variable) -> SparsePolynomial:
    result = poly(1)
    for a in A:
        result = result * _linear_form(A, a, zvar)
    return result


def t_poly(A: IndexSet | Iterable[int], zvar: Variable = Z) -> SparsePolynomial:
    """Binomial-type family member over A, expanded and canonical.

    ``zvar`` times the product of the linear forms over every member of A
    except the maximum; 1 on the empty set.
    """
    return _t_poly_cached(_as_index_set(A), zvar)


def s_poly(A: IndexSet | Iterable[int], zvar: Variable = Z) -> SparsePolynomial:
    """Sheffer-type family member over A: the full product of linear forms."""
    return _s_poly_cached(_as_index_set(A), zvar)


def identity_sides(
    identity: IdentityName,
    A: IndexSet | Iterable[int],
    *,
    budget: int = SYMBOLIC_BUDGET,
) -> tuple[SparsePolynomial, SparsePolynomial]:
    """Symbolic left and right sides of one identity over ground set A.

    The convolution identities enumerate ``2**|A|`` decompositions, each a
    product of expanded factors, so they carry a size guard; pass a larger
    ``budget`` to lift it deliberately.
    """
    A = _as_index_set(A)
    if identity == "easy":
        if not A:
            raise ValueError("the head-factor identity needs a nonempty ground set")
        lhs = (poly(Z) + y_lower_sum(A, max(A))) * t_poly(A)
        rhs = poly(Z) * s_poly(A)
        return lhs, rhs
    if identity not in ("sheffer", "binomial"):
        raise ValueError(f"unknown identity {identity!r}, expected one of {_IDENTITIES}")
    if len(A) > budget:
        raise ValueError(
            f"|A| = {len(A)} exceeds the symbolic expansion budget {budget};"
            " use random_identity_check instead"
        )
    shifted = {Z: poly(Z) + poly(W)}
    if identity == "sheffer":
        lhs = s_poly(A).substitute(shifted)
        rhs = poly(0)
        for left, right in partitions_into_two(A):
            rhs = rhs + s_poly(left) * t_poly(right, zvar=W)
    else:
        lhs = t_poly(A).substitute(shifted)
        rhs = poly(0)
        for left, right in partitions_into_two(A):
            rhs = rhs + t_poly(left) * t_poly(right, zvar=W)
    return lhs, rhs


def check_easy_identity(A: IndexSet | Iterable[int]) -> bool:
    """Head-factor identity: true iff both sides expand to the same polynomial."""
    lhs, rhs = identity_sides("easy", A)
    return lhs == rhs


def check_sheffer_convolution(
    A: IndexSet | Iterable[int], *, budget: int = SYMBOLIC_BUDGET
) -> bool:
    """Sheffer-type convolution over all ordered splits of A, symbolically."""
    lhs, rhs = identity_sides("sheffer", A, budget=budget)
    return lhs == rhs


def check_binomial_convolution(
    A: IndexSet | Iterable[int], *, budget: int = SYMBOLIC_BUDGET
) -> bool:
    """Binomial-type convolution over all ordered splits of A, symbolically."""
    lhs, rhs = identity_sides("binomial", A, budget=budget)
    return lhs == rhs


def s_value(A: Iterable[int], assignment: ParameterAssignment, at: int) -> int:
    """Exact value of the Sheffer-type product at integer arguments.

    ``at`` stands in for the main variable; no symbolic expansion happens,
    so this is an independent route to the same number as
    ``s_poly(A).evaluate(...)``.
    """
    members = tuple(A)
    total = 1
    for a in members:
        acc = at
        for j in members:
            if j <= a:
                acc += assignment.y_vals[j]
            else:
                acc += assignment.x_vals[(a, j)]
        total *= acc
    return total


def t_value(A: Iterable[int], assignment: ParameterAssignment, at: int) -> int:
    """Exact value of the binomial-type product at integer arguments."""
    members = tuple(A)
    if not members:
        return 1
    total = at
    for a in members[:-1]:
        acc = at
        for j in members:
            if j <= a:
                acc += assignment.y_vals[j]
            else:
                acc += assignment.x_vals[(a, j)]
        total *= acc
    return total


def identity_value_sides(
    identity: IdentityName,
    A: IndexSet | Iterable[int],
    assignment: ParameterAssignment,
    *,
    omit: tuple[Iterable[int], Iterable[int]] | None = None,
) -> tuple[int, int]:
    """Exact integer left and right sides of an identity at one assignment.

    ``omit`` drops a single (left, right) decomposition from a convolution
    sum; dropping any term must break the identity, which is how the
    randomized check is shown to have teeth.
    """
    A = _as_index_set(A)
    skip = None
    if omit is not None:
        skip = (tuple(omit[0]), tuple(omit[1]))
    if identity == "easy":
        if not A:
            raise ValueError("the head-factor identity needs a nonempty ground set")
        head = assignment.z_val + sum(assignment.y_vals[j] for j in A)
        return head * t_value(A, assignment, assignment.z_val), assignment.z_val * s_value(
            A, assignment, assignment.z_val
        )
    if identity not in ("sheffer", "binomial"):
        raise ValueError(f"unknown identity {identity!r}, expected one of {_IDENTITIES}")
    at = assignment.z_val + assignment.w_val
    rhs = 0
    if identity == "sheffer":
        lhs = s_value(A, assignment, at)
        for left, right in partitions_into_two(A):
            if skip is not None and (tuple(left), tuple(right)) == skip:
                continue
            rhs += s_value(left, assignment, assignment.z_val) * t_value(
                right, assignment, assignment.w_val
            )
    else:
        lhs = t_value(A, assignment, at)
        for left, right in partitions_into_two(A):
            if skip is not None and (tuple(left), tuple(right)) == skip:
                continue
            rhs += t_value(left, assignment, assignment.z_val) * t_value(
                right, assignment, assignment.w_val
            )
    return lhs, rhs


def random_identity_check(
    identity: IdentityName,
    A: IndexSet | Iterable[int],
    trials: int = 20,
    seed: int = 0,
    *,
    omit: tuple[Iterable[int], Iterable[int]] | None = None,
) -> bool:
    """Probabilistic identity check by exact evaluation at random points.

    Draws ``trials`` assignments with values uniform in [-10^6, 10^6] from a
    generator seeded with ``seed`` and compares both sides exactly; any
    disagreement ends the check.  Both sides are degree <= |A| + 1, so a
    false pass at these ranges is vanishingly unlikely.  On the empty ground
    set every identity degenerates to 1 = 1 and the answer is True for any
    seed.
    """
    A = _as_index_set(A)
    if identity not in _IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}, expected one of {_IDENTITIES}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials!r}")
    if not A:
        return True
    rng = random.Random(seed)
    for _ in range(trials):
        assignment = ParameterAssignment.random_for(A, rng)
        lhs, rhs = identity_value_sides(identity, A, assignment, omit=omit)
        if lhs != rhs:
            return False
    return True


def f_as_t_specialization(sizes: SizesLike, z_val: int) -> int:
    """Parking-sequence count obtained from the binomial-type polynomial.

    Builds the family member over {1..n}, sets every x parameter to 1, every
    y_j to the j-th car size, the main variable to ``z_val``, and evaluates
    exactly.  Must agree with the closed-form product for every input.
    """
    cars = as_car_sizes(sizes)
    if not isinstance(z_val, int) or z_val < 1:
        raise ValueError(f"trailer parameter must be an integer >= 1, got {z_val!r}")
    A = IndexSet.first(cars.n)
    assignment = ParameterAssignment(
        z_val=z_val,
        w_val=0,
        y_vals={j: cars.sizes[j - 1] for j in A},
        x_vals={(i, j): 1 for i in A for j in A if i < j},
    )
    return t_poly(A).evaluate(assignment)


def abel_rothe_specialize(
    A: IndexSet | Iterable[int],
    which: Literal["t", "s"],
    xi: int,
    eta: int,
) -> SparsePolynomial:
    """Collapse a family member to a univariate polynomial in the main variable.

    Every x parameter becomes the constant ``xi`` and every y parameter the
    constant ``eta``; the result is the classical Abel--Rothe shape.  For the
    binomial-type family over {1..n} it equals
    ``z * prod_{a=1}^{n-1} (z + a*eta + (n-a)*xi)``.
    """
    A = _as_index_set(A)
    if which == "t":
        base = t_poly(A)
    elif which == "s":
        base = s_poly(A)
    else:
        raise ValueError(f"which must be 't' or 's', got {which!r}")
    rules: dict[Variable, SparsePolynomial] = {}
    for j in A:
        rules[y_var(j)] = poly(eta)
    for i in A:
        for j in A:
            if i < j:
                rules[x_var(i, j)] = poly(xi)
    return base.substitute(rules)
