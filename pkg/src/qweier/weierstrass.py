"""Deciding whether the cusp at infinity is an (m/2)-Weierstrass point.

Given a basis f_0, ..., f_{g-1} of the weight-2 cusp forms of a group of
genus g, the degree-(m/2) monomials in the f_i land in the subspace S^H_m
of weight-m cusp forms coming from holomorphic (m/2)-differentials.  Row
reduction of their coefficient matrix yields the attainable leading
exponents ("gap sequence"); the cusp is NOT an (m/2)-Weierstrass point
exactly when the matrix has full expected rank t = dim S^H_m and the
exponents are the consecutive run m/2, m/2+1, ..., m/2+t-1.

The rank statement is only conclusive when the monomials are known to span
S^H_m: that holds on non-hyperelliptic curves, and trivially whenever the
observed rank equals t.  On hyperelliptic curves the span is provably a
proper subspace for m >= 6, so the verdict is refused there; at m = 4 a
report is still produced but flagged SPAN_NOT_GUARANTEED.

An independent route to the same verdict goes through the q-Wronskian: the
order of vanishing of the Wronskian of an echelon basis of S^H_m at the
cusp equals the sum of the gap sequence, and the cusp is an
(m/2)-Weierstrass point iff that order reaches 1 + t(m-1+t)/2.
"""

from math import comb

from .errors import (DomainError, HyperellipticUnsupported, PrecisionError,
                     RankDeficit, ValidationError)
from .exactlinalg import RatMatrix, echelon_reduce, pivot_columns
from .qseries import QSeries
from .surface import HYPERELLIPTIC, NOT_HYPERELLIPTIC, dim_s_h
from .wronskian import wronskian_valuation

#: Report flag: the curve is hyperelliptic and the monomial matrix came out
#: rank-deficient, so the monomials are not known to span S^H_m and the
#: verdict must not be trusted.
SPAN_NOT_GUARANTEED = "SPAN_NOT_GUARANTEED"


class ModularFormRecord:
    """A labeled q-expansion with its weight, level, and cusp width."""

    __slots__ = ("label", "series", "weight", "level_label", "cusp_width")

    def __init__(self, label, series, weight, level_label="", cusp_width=1):
        if cusp_width < 1:
            raise DomainError("cusp width must be >= 1")
        self.label = label
        self.series = series
        self.weight = weight
        self.level_label = level_label
        self.cusp_width = cusp_width

    def __repr__(self):
        return "ModularFormRecord(%r, weight=%d, %s)" % (
            self.label, self.weight, self.series.qstring(3))


class CuspBasis:
    """A basis of the weight-2 cusp forms of a genus-g group: exactly g
    labeled weight-2 forms at one common precision, each vanishing at the
    infinite cusp."""

    __slots__ = ("level_label", "forms", "genus", "prec")

    def __init__(self, level_label, forms):
        forms = list(forms)
        if not forms:
            raise ValidationError("a cusp basis needs at least one form")
        for f in forms:
            if f.weight != 2:
                raise ValidationError(
                    "form %r has weight %d; every basis form must have weight 2"
                    % (f.label, f.weight))
        precs = {f.series.prec for f in forms}
        if len(precs) != 1:
            raise ValidationError(
                "forms carry inconsistent precisions %s" % sorted(precs))
        for f in forms:
            if f.series.prec >= 1 and f.series.coeff(0) != 0:
                raise ValidationError(
                    "form %r has a nonzero constant term; basis forms must be "
                    "cusp forms" % f.label)
        self.level_label = level_label
        self.forms = forms
        self.genus = len(forms)
        self.prec = precs.pop()

    @classmethod
    def from_series(cls, level_label, series_list, weight=2):
        """Wrap bare series as records labeled f0, f1, ... ."""
        records = [
            ModularFormRecord("f%d" % i, s, weight, level_label)
            for i, s in enumerate(series_list)
        ]
        return cls(level_label, records)

    def series_list(self):
        return [f.series for f in self.forms]

    def __repr__(self):
        return "CuspBasis(%r, genus=%d, prec=%d)" % (
            self.level_label, self.genus, self.prec)


class WeierstrassReport:
    """Outcome of the monomial-elimination test at one even weight m.

    gap_sequence lists the leading exponents attainable in the span of the
    degree-(m/2) monomials; rows are the echelon q-expansions realizing
    them and combinations the corresponding coordinates in the monomial
    list (same order as monomial_exponents).  is_weierstrass applies the
    consecutive-exponent criterion; flags carry SPAN_NOT_GUARANTEED when
    the verdict is not backed by a spanning argument.
    """

    __slots__ = ("m", "expected_dim", "monomial_count", "rank",
                 "gap_sequence", "is_weierstrass", "criterion_bound",
                 "rows", "combinations", "monomial_exponents", "flags")

    def __init__(self, m, expected_dim, monomial_count, rank, gap_sequence,
                 is_weierstrass, criterion_bound, rows, combinations,
                 monomial_exponents, flags=()):
        self.m = m
        self.expected_dim = expected_dim
        self.monomial_count = monomial_count
        self.rank = rank
        self.gap_sequence = tuple(gap_sequence)
        self.is_weierstrass = is_weierstrass
        self.criterion_bound = criterion_bound
        self.rows = rows
        self.combinations = combinations
        self.monomial_exponents = tuple(monomial_exponents)
        self.flags = tuple(flags)

    def __repr__(self):
        return ("WeierstrassReport(m=%d, t=%d, rank=%d, gaps=%s, "
                "is_weierstrass=%s%s)" % (
                    self.m, self.expected_dim, self.rank,
                    list(self.gap_sequence), self.is_weierstrass,
                    ", flags=%s" % (self.flags,) if self.flags else ""))


def _require_even(m, minimum):
    if m % 2 != 0 or m < minimum:
        raise DomainError(
            "weight must be an even integer >= %d, got %s" % (minimum, m))


def required_precision(g, m):
    """Coefficients through q^(m/2 + m(g-1)) are needed to read off the
    largest admissible leading exponent, plus one guard term: returns
    m/2 + m(g-1) + 1."""
    if g < 1:
        raise DomainError("genus must be >= 1")
    _require_even(m, 2)
    return m // 2 + m * (g - 1) + 1


def monomials(basis, m):
    """All degree-(m/2) monomials in the basis forms, in lexicographically
    decreasing exponent order, as (exponent vector, series) pairs.

    For m = 2 the list is the basis itself.  Each product is truncated to
    the common basis precision; the shared-prefix recursion performs one
    series multiplication per enumeration step.
    """
    _require_even(m, 2)
    g = basis.genus
    need = required_precision(g, m)
    if basis.prec < need:
        raise PrecisionError(
            "basis precision %d is below the %d coefficients required for "
            "genus %d, weight %d" % (basis.prec, need, g, m))
    fs = basis.series_list()
    prec = basis.prec
    out = []
    vec = [0] * g

    def rec(i, rem, prefix):
        if i == g - 1:
            vec[i] = rem
            p = prefix
            for _ in range(rem):
                p = p * fs[i]
            out.append((tuple(vec), p))
            vec[i] = 0
            return
        chain = [prefix]
        for _ in range(rem):
            chain.append(chain[-1] * fs[i])
        for a in range(rem, -1, -1):
            vec[i] = a
            rec(i + 1, rem - a, chain[a])
        vec[i] = 0

    rec(0, m // 2, QSeries.one(prec))
    assert len(out) == comb(g + m // 2 - 1, m // 2)
    return out


def _monomial_matrix(basis, m):
    mono = monomials(basis, m)
    return mono, RatMatrix([list(s.coeffs) for _, s in mono], cols=basis.prec)


def subspace_dimension(basis, m):
    """dim S^H_{m,2}: the rank of the degree-(m/2) monomial matrix."""
    _, matrix = _monomial_matrix(basis, m)
    return len(pivot_columns(matrix))


def weierstrass_test(basis, m, sig, hyperelliptic_status=NOT_HYPERELLIPTIC):
    """Run the monomial-elimination test for the infinite cusp.

    sig must carry the same genus as the basis (>= 2).  The default
    hyperelliptic_status asserts the curve is not hyperelliptic, which is
    what makes a rank-deficient matrix an error (RankDeficit: the
    monomials provably span S^H_m there, so a shortfall means bad input).
    Pass surface.HYPERELLIPTIC to get, instead, HyperellipticUnsupported
    for m >= 6 (the span is provably proper) or a SPAN_NOT_GUARANTEED
    report at m = 4.
    """
    if sig.genus != basis.genus:
        raise DomainError(
            "signature genus %d does not match basis genus %d"
            % (sig.genus, basis.genus))
    if basis.genus < 2:
        raise DomainError(
            "no (m/2)-Weierstrass points exist for genus 0 or 1")
    _require_even(m, 2)
    mono, matrix = _monomial_matrix(basis, m)
    result = echelon_reduce(matrix)
    t = dim_s_h(sig, m)
    rank = result.rank
    if rank > t:
        raise ValidationError(
            "monomial matrix rank %d exceeds dim S^H_%d = %d: the basis and "
            "signature are inconsistent" % (rank, m, t))
    flags = ()
    if rank < t:
        if m == 2:
            raise RankDeficit(
                "the %d basis forms only span a %d-dimensional space"
                % (t, rank))
        if hyperelliptic_status == HYPERELLIPTIC:
            if m >= 6:
                raise HyperellipticUnsupported(
                    "hyperelliptic curve at weight %d: the monomials span a "
                    "proper subspace of S^H_%d (rank %d < %d), so the gap "
                    "criterion does not apply" % (m, m, rank, t))
            flags = (SPAN_NOT_GUARANTEED,)
        else:
            raise RankDeficit(
                "monomial matrix rank %d < dim S^H_%d = %d on a "
                "non-hyperelliptic curve: the input basis is defective"
                % (rank, m, t))
    pivots = list(result.pivots)
    expected = list(range(m // 2, m // 2 + t))
    is_weierstrass = not (rank == t and pivots == expected)
    rows = [
        QSeries(result.echelon.row(i), basis.prec) for i in range(rank)
    ]
    combinations = [tuple(result.transform.row(i)) for i in range(rank)]
    return WeierstrassReport(
        m=m,
        expected_dim=t,
        monomial_count=len(mono),
        rank=rank,
        gap_sequence=pivots,
        is_weierstrass=is_weierstrass,
        criterion_bound=m // 2 + m * (basis.genus - 1),
        rows=rows,
        combinations=combinations,
        monomial_exponents=[v for v, _ in mono],
        flags=flags,
    )


def wronskian_criterion(basis_of_sh, m):
    """The Wronskian-order route to the same verdict.

    basis_of_sh must be a linearly independent basis of S^H_m (for
    example the rows of a full-rank WeierstrassReport).  Returns
    (order, bound, is_weierstrass) where order is the exact q-valuation
    of the q-Wronskian, bound = 1 + t(m-1+t)/2, and the cusp is an
    (m/2)-Weierstrass point iff order >= bound.
    """
    _require_even(m, 2)
    t = len(basis_of_sh)
    if t < 1:
        raise DomainError("need at least one form")
    order = wronskian_valuation(basis_of_sh)
    twice_bound = t * (m - 1 + t)
    assert twice_bound % 2 == 0
    bound = 1 + twice_bound // 2
    return order, bound, order >= bound
