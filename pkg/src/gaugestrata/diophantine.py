"""Solvability criteria for the characteristic bundle-reduction equations.

For a label J = (k, m) the presence of the corresponding orbit type over a
given 4-manifold reduces to an integer divisibility or representability
question:

* S^4: a linear equation, solvable iff gcd(red k) divides the Chern number.
* S^2 x S^2 and T^4: a bilinear equation, controlled by the gcd of the
  form's coefficients together with gcd(red k).
* CP^2: a quadratic form subject to a linear constraint; decided here by
  an exact finite search, with a closed-form cross-check for the maximal
  torus case.

All arithmetic is exact (Python integers).
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass

from .labels import HoweLabel, format_label

DEFAULT_BUDGET = 10_000_000
BUDGET_ENV_VAR = "STRATA_BUDGET"


class BudgetExceededError(RuntimeError):
    """A finite search would exceed the configured iteration budget."""

    def __init__(self, label: HoweLabel, required: int, budget: int):
        self.label = label
        self.required = required
        self.budget = budget
        super().__init__(
            f"search for label {format_label(label)} needs {required} iterations, "
            f"budget is {budget}")


def _resolve_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    return int(os.environ.get(BUDGET_ENV_VAR, DEFAULT_BUDGET))


def gcd_seq(seq) -> int:
    """gcd of a sequence of nonnegative integers, with gcd of nothing = 0."""
    return math.gcd(*seq)


def reduced_k(label: HoweLabel) -> tuple[int, ...]:
    """Subsequence of k at positions where m_i != 1 (possibly empty)."""
    return tuple(ki for ki, mi in label.pairs if mi != 1)


def d_s4(label: HoweLabel) -> int:
    """Divisor deciding presence over S^4: gcd(red k)."""
    return gcd_seq(reduced_k(label))


def l_coefficients(label: HoweLabel) -> tuple[int, ...]:
    """Nonzero bilinear-form coefficients, up to sign, sorted ascending.

    With g = gcd(k) and kt_i = k_i / g these are g*kt_a*kt_b*(kt_a + kt_b)
    for each pair a < b, and g*kt_a*kt_b*kt_c for each triple a < b < c.
    Empty for r = 1.
    """
    r = label.r
    if r == 1:
        return ()
    g = gcd_seq(label.k)
    kt = [ki // g for ki in label.k]
    coeffs = []
    for a in range(r):
        for b in range(a + 1, r):
            coeffs.append(g * kt[a] * kt[b] * (kt[a] + kt[b]))
            for c in range(b + 1, r):
                coeffs.append(g * kt[a] * kt[b] * kt[c])
    return tuple(sorted(coeffs))


def d_s2xs2(label: HoweLabel) -> int:
    """Divisor deciding presence over S^2 x S^2 (and T^4)."""
    return math.gcd(d_s4(label), gcd_seq(l_coefficients(label)))


@dataclass(frozen=True)
class SkolemBasis:
    """Generators of the solution lattice of sum(k_i * a_i) = 0.

    `k_unit` holds k_i / gcd(k). For each index pair p < q (0-based) the
    generator has k_unit[q] at position p, -k_unit[p] at position q, and
    zeros elsewhere. Integer combinations produce every solution; only for
    r = 2 is the parametrization one-to-one.
    """

    k: tuple[int, ...]
    k_unit: tuple[int, ...]
    generators: dict[tuple[int, int], tuple[int, ...]]


def skolem_basis(k) -> SkolemBasis:
    """Generators of the null lattice of the constraint sum(k_i * a_i) = 0."""
    k = tuple(k)
    r = len(k)
    if r < 2:
        raise ValueError(f"need at least two entries, got {r}")
    if any(ki < 1 for ki in k):
        raise ValueError(f"entries must be positive, got {k}")
    g = gcd_seq(k)
    kt = tuple(ki // g for ki in k)
    gens = {}
    for p in range(r):
        for q in range(p + 1, r):
            vec = [0] * r
            vec[p] = kt[q]
            vec[q] = -kt[p]
            gens[(p, q)] = tuple(vec)
    return SkolemBasis(k=k, k_unit=kt, generators=gens)


def quad_value(label: HoweLabel, a) -> int:
    """Exact value of Q(a) = 1/2 * sum_ij k_i (k_j - delta_ij) a_i a_j.

    The double sum collapses to (sum k_i a_i)^2 - sum k_i a_i^2, which is
    always even, so the halving is exact.
    """
    a = tuple(a)
    if len(a) != label.r:
        raise ValueError(f"vector length {len(a)} != r = {label.r}")
    s1 = sum(ki * ai for ki, ai in zip(label.k, a))
    twice = s1 * s1 - sum(ki * ai * ai for ki, ai in zip(label.k, a))
    assert twice % 2 == 0
    return twice // 2


def _zero_sum_representable(k: tuple[int, ...], target: int) -> bool:
    """Decide whether sum(k_i*a_i) = 0 and sum(k_i*a_i^2) = target have a
    common integer solution, for target > 0.

    The first r-2 coordinates range over the box k_i*a_i^2 <= remaining
    budget; the last two are solved in closed form (a quadratic in b after
    eliminating a via the linear equation), which keeps the search cheap
    even for large targets.
    """
    r = len(k)
    if r == 1:
        return target == 0
    kp, kq = k[-2], k[-1]

    def last_two(lin_t: int, quad_r: int) -> bool:
        # Solve kp*a + kq*b = lin_t, kp*a^2 + kq*b^2 = quad_r.
        if quad_r < 0:
            return False
        disc = 4 * kp * kq * (quad_r * (kp + kq) - lin_t * lin_t)
        if disc < 0:
            return False
        root = math.isqrt(disc)
        if root * root != disc:
            return False
        den = 2 * kq * (kq + kp)
        for num in (2 * lin_t * kq + root, 2 * lin_t * kq - root):
            if num % den:
                continue
            b = num // den
            rem = lin_t - kq * b
            if rem % kp:
                continue
            a = rem // kp
            if kp * a + kq * b == lin_t and kp * a * a + kq * b * b == quad_r:
                return True
        return False

    def descend(i: int, lin: int, quad: int) -> bool:
        if i == r - 2:
            return last_two(-lin, target - quad)
        bound = math.isqrt((target - quad) // k[i])
        for ai in range(-bound, bound + 1):
            if descend(i + 1, lin + k[i] * ai, quad + k[i] * ai * ai):
                return True
        return False

    return descend(0, 0, 0)


def cp2_solvable(label: HoweLabel, c_p: int, budget: int | None = None) -> bool:
    """Decide the CP^2 characteristic equation for the given Chern number.

    With g = gcd(red k), integers b and a are sought with sum(k_i*a_i) = 0
    and g*b + Q(a) = c_p. On the constraint surface Q(a) = -1/2*sum(k_i*a_i^2),
    so for g = 0 this is a bounded representability search, and for g > 0
    only the Skolem parameters modulo g matter (Q composed with the
    parametrization has integer coefficients).

    Raises BudgetExceededError when the modular search would exceed the
    iteration budget (default 10**7, overridable via STRATA_BUDGET).
    """
    g = d_s4(label)
    k = label.k
    r = label.r
    if g == 0:
        # red k empty, i.e. all m_i = 1: b is forced to 0.
        if c_p > 0:
            return False
        if c_p == 0:
            return True
        return _zero_sum_representable(k, -2 * c_p)
    npairs = r * (r - 1) // 2
    required = g ** npairs
    budget = _resolve_budget(budget)
    if required > budget:
        raise BudgetExceededError(label, required, budget)
    if npairs == 0:
        return c_p % g == 0
    gens = list(skolem_basis(k).generators.values())
    for t in itertools.product(range(g), repeat=npairs):
        a = [sum(ti * gen[i] for ti, gen in zip(t, gens)) for i in range(r)]
        ssq = sum(ki * ai * ai for ki, ai in zip(k, a))
        if (c_p + ssq // 2) % g == 0:
            return True
    return False


def jones_solvable(c_p: int) -> bool:
    """Closed-form solvability of -(a1^2 + a1*a2 + a2^2) = c_p.

    Solvable iff c_p <= 0 and, writing -c_p = 3^m * q with 3 not dividing q,
    q is not congruent to 2 mod 3, and every prime congruent to 5 or 11
    mod 12 divides -c_p to an even power. c_p = 0 is solvable (zero vector).
    """
    if c_p > 0:
        return False
    c = -c_p
    if c == 0:
        return True
    q = c
    while q % 3 == 0:
        q //= 3
    if q % 3 == 2:
        return False
    # Trial division; inputs are desk-scale.
    rest = c
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            exp = 0
            while rest % p == 0:
                rest //= p
                exp += 1
            if p % 12 in (5, 11) and exp % 2:
                return False
        p += 1 if p == 2 else 2
    if rest > 1 and rest % 12 in (5, 11):
        return False
    return True
