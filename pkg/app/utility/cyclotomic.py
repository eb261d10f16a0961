# app/utility/cyclotomic.py
"""
Cyclotomic polynomials, multiplicative orders and factored polynomial orders of
classical finite reductive groups.
"""
import functools
import logging

from sympy import divisors, factorint, isprime
from sympy.ntheory import n_order

from app.schemas.enums.families_types import Family
from app.schemas.models.groups_models import FiniteGroupSpec, GroupFactor
from app.schemas.models.polys_models import CycFactorization, CycPoly
from app.utility.exceptions import InvalidInputError, UnsupportedTypeError

logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> CycPoly:
    """
    >>> cyclotomic_poly(6)
    CycPoly('x^2 - x + 1')
    """
    if n <= 0:
        raise InvalidInputError(f"cyclotomic index must be positive, got {n}")
    # x^n - 1 divided by Φ_d for every proper divisor d of n
    poly = CycPoly.monomial(n) - 1
    for d in divisors(n)[:-1]:
        poly = poly // cyclotomic_poly(d)
    return poly


def check_prime(ell: int) -> None:
    if not isprime(ell):
        raise InvalidInputError(f"ℓ must be a prime number, got {ell}")


def multiplicative_order(q: int, ell: int) -> int:
    check_prime(ell)
    if q < 2:
        raise InvalidInputError(f"q must be at least 2, got {q}")
    if q % ell == 0:
        raise InvalidInputError(f"ℓ={ell} divides q={q}")
    return int(n_order(q, ell))


def d_prime(d: int) -> int:
    """The Ennola index: Φ_d(-x) = ±Φ_{d'}(x)."""
    if d < 1:
        raise InvalidInputError(f"d must be positive, got {d}")
    if d % 2:
        return 2 * d
    if d % 4 == 2:
        return d // 2
    return d


def compose_factorization(n: int, a: int) -> CycFactorization:
    """Φ_n(x^a) = ∏_{k | a'} Φ_{k·a_n·n}(x), where a = a_n·a' and a' is coprime to n."""
    if n < 1 or a < 1:
        raise InvalidInputError(f"indices must be positive, got n={n}, a={a}")
    a_n = 1
    for p, e in factorint(a).items():
        if n % p == 0:
            a_n *= p**e
    a_rest = a // a_n
    return CycFactorization.from_indices(k * a_n * n for k in divisors(a_rest))


def _x_power_minus_one(j: int) -> list[int]:
    return list(divisors(j))


def _factor_indices(factor: GroupFactor) -> tuple[int, list[int]]:
    """x-power and cyclotomic indices (with repetition) of one untwisted-scalar factor."""
    n = factor.rank
    family = factor.family
    if family == Family.TORUS:
        return 0, [1] * n
    if family in (Family.A, Family.TWISTED_A):
        indices = [e for j in range(2, n + 2) for e in _x_power_minus_one(j)]
        if family == Family.TWISTED_A:
            # x^j - (-1)^j = ±∏_{e | j} Φ_e(-x)
            indices = [d_prime(e) for e in indices]
        return n * (n + 1) // 2, indices
    if family in (Family.B, Family.C):
        return n * n, [e for j in range(1, n + 1) for e in _x_power_minus_one(2 * j)]
    if family in (Family.D, Family.TWISTED_D):
        indices = [e for j in range(1, n) for e in _x_power_minus_one(2 * j)]
        if family == Family.D:
            indices += _x_power_minus_one(n)
        else:
            # x^n + 1 = (x^{2n} - 1) / (x^n - 1)
            indices += [e for e in divisors(2 * n) if n % e]
        return n * (n - 1), indices
    raise UnsupportedTypeError(f"no polynomial order for type {factor}")


def order_poly(g: FiniteGroupSpec) -> CycFactorization:
    result = CycFactorization()
    for factor in g.factors:
        x_power, indices = _factor_indices(factor)
        m = factor.ext_degree
        part = CycFactorization(x_power * m)
        for e in indices:
            part = part * (compose_factorization(e, m) if m > 1 else CycFactorization.from_indices([e]))
        result = result * part
    logger.debug("order polynomial of %s: %s", g, result)
    return result


def phi_d_divides_order(g: FiniteGroupSpec, d: int) -> bool:
    if d < 1:
        raise InvalidInputError(f"d must be positive, got {d}")
    return d in order_poly(g).indices


def ell_divides_order(g: FiniteGroupSpec, q: int, ell: int) -> bool:
    """ℓ divides |G(q)| iff some Φ_e with e in {d, dℓ, dℓ², ...} occurs (ℓ not dividing q)."""
    d = multiplicative_order(q, ell)
    for e in order_poly(g).indices:
        if e % d:
            continue
        ratio = e // d
        while ratio % ell == 0:
            ratio //= ell
        if ratio == 1:
            return True
    return False
