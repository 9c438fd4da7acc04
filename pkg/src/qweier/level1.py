"""Modular forms for the full modular group: Eisenstein series E4 and E6,
the discriminant form, monomial bases E4^a * E6^b of each weight, the
dimension formula, and expression of a form in the monomial basis.
"""

from collections import namedtuple
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, NotInSpace, PrecisionError
from .qseries import QSeries

#: Exponent pair (alpha, beta) of a monomial E4^alpha * E6^beta.
MonomialExponent = namedtuple("MonomialExponent", ["alpha", "beta"])


class Level1Form:
    """A q-expansion together with its (even) weight."""

    __slots__ = ("series", "weight")

    def __init__(self, series, weight):
        if weight % 2 != 0 or weight < 0:
            raise DomainError("weight must be an even nonnegative integer")
        if weight == 0 and any(c != 0 for c in series.coeffs[1:]):
            raise DomainError("weight 0 is reserved for constants")
        self.series = series
        self.weight = weight

    def __repr__(self):
        return "Level1Form(weight=%d, %s)" % (self.weight, self.series.qstring(5))


def sigma(n, k):
    """Sum of the k-th powers of the positive divisors of n."""
    if n <= 0:
        raise DomainError("sigma(n, k) needs n >= 1, got n=%d" % n)
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d ** k
            e = n // d
            if e != d:
                total += e ** k
        d += 1
    return total


@lru_cache(maxsize=None)
def eisenstein_e4(prec):
    """E4 = 1 + 240 * sum sigma_3(n) q^n, weight 4."""
    coeffs = [Fraction(1)] + [Fraction(240 * sigma(n, 3)) for n in range(1, prec)]
    return Level1Form(QSeries(coeffs, prec), 4)


@lru_cache(maxsize=None)
def eisenstein_e6(prec):
    """E6 = 1 - 504 * sum sigma_5(n) q^n, weight 6."""
    coeffs = [Fraction(1)] + [Fraction(-504 * sigma(n, 5)) for n in range(1, prec)]
    return Level1Form(QSeries(coeffs, prec), 6)


@lru_cache(maxsize=None)
def delta(prec):
    """The weight-12 cusp form (E4^3 - E6^2)/1728 = q - 24q^2 + 252q^3 - ..."""
    e4 = eisenstein_e4(prec).series
    e6 = eisenstein_e6(prec).series
    series = (e4 ** 3 - e6 ** 2).scaled(Fraction(1, 1728))
    return Level1Form(series, 12)


def delta_product_oracle(prec):
    """Independent expansion q * prod_{n>=1} (1 - q^n)^24, used in tests only.

    The product prod (1 - q^n) is expanded by Euler's pentagonal number
    theorem, so this route shares no code with the Eisenstein construction.
    """
    if prec < 1:
        raise DomainError("prec must be >= 1")
    euler = [Fraction(0)] * max(prec - 1, 1)
    euler[0] = Fraction(1)
    j = 1
    while True:
        p1 = j * (3 * j - 1) // 2
        p2 = j * (3 * j + 1) // 2
        if p1 >= len(euler) and p2 >= len(euler):
            break
        s = Fraction(-1 if j % 2 else 1)
        if p1 < len(euler):
            euler[p1] += s
        if p2 < len(euler):
            euler[p2] += s
        j += 1
    return (QSeries(euler, prec - 1) ** 24).shifted(1) if prec > 1 else QSeries.zero(1)


def dim_m(m):
    """Dimension of the space of weight-m forms for the full modular group:
    floor(m/12) + 1, except one less when m = 2 mod 12."""
    if m % 2 != 0 or m < 0:
        raise DomainError("weight must be an even nonnegative integer")
    if m % 12 == 2:
        return m // 12
    return m // 12 + 1


def m_basis(m):
    """All exponent pairs (alpha, beta) with 4*alpha + 6*beta = m, sorted by
    decreasing alpha.  The corresponding monomials E4^a E6^b form a basis."""
    if m % 2 != 0 or m < 0 or m == 2:
        raise DomainError("no monomial basis for weight %s" % (m,))
    if m == 0:
        return [MonomialExponent(0, 0)]
    out = []
    for alpha in range(m // 4, -1, -1):
        rest = m - 4 * alpha
        if rest % 6 == 0:
            out.append(MonomialExponent(alpha, rest // 6))
    return out


def monomial_series(exponent, prec):
    """The expansion of E4^alpha * E6^beta to the given precision."""
    e4 = eisenstein_e4(prec).series
    e6 = eisenstein_e6(prec).series
    return e4 ** exponent.alpha * e6 ** exponent.beta


def _solve_square(rows, rhs):
    """Gaussian elimination for a small nonsingular square system."""
    n = len(rows)
    a = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        assert piv is not None, "singular system"
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [a[i][n] for i in range(n)]


def express_in_monomials(f):
    """Write a weight-m form as a rational combination of the monomials
    E4^a E6^b, 4a + 6b = m.

    The combination is found by solving the square linear system on the
    first dim coefficients and then verified against every further stored
    coefficient; a nonzero residual raises NotInSpace.  Returns the list of
    (MonomialExponent, coefficient) pairs with nonzero coefficient, in
    m_basis order.
    """
    basis = m_basis(f.weight)
    d = len(basis)
    prec = f.series.prec
    if prec < d + 1:
        raise PrecisionError(
            "need at least %d coefficients to certify membership, have %d"
            % (d + 1, prec)
        )
    monos = [monomial_series(exp, prec) for exp in basis]
    rows = [[monos[j].coeffs[n] for j in range(d)] for n in range(d)]
    rhs = [f.series.coeffs[n] for n in range(d)]
    coeffs = _solve_square(rows, rhs)
    for n in range(d, prec):
        residual = f.series.coeffs[n] - sum(
            coeffs[j] * monos[j].coeffs[n] for j in range(d)
        )
        if residual != 0:
            raise NotInSpace(
                "residual %s at q^%d: not a weight-%d form of the full group "
                "at this precision" % (residual, n, f.weight)
            )
    return [(basis[j], coeffs[j]) for j in range(d) if coeffs[j] != 0]
