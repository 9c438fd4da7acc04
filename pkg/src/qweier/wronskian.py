"""q-Wronskians of series lists, span valuations, and the cusp-order
identity connecting them.

The q-Wronskian of f_1, ..., f_k is the determinant of the k x k matrix
whose i-th row applies (q d/dq)^i to each f_j.  Determinants are evaluated
by Laplace expansion with memoization over column subsets for k <= 8 and by
fraction-free elimination on series entries beyond that.

Every input column is first reduced by its q-valuation: with f = q^v g,
(q d/dq)^i f = q^v (v + q d/dq)^i g, so W_q(f_1,...,f_k) =
q^(v_1+...+v_k) * det[(v_j + q d/dq)^i g_j].  This identity is exact and
keeps the working precision small even when the Wronskian itself vanishes
to very high order; for inputs with pairwise distinct valuations the
reduced determinant has a nonzero constant term (a Vandermonde factor
times the product of the leading coefficients), so the valuation of W_q
is certified from very few terms of the reduced determinant.
"""

from fractions import Fraction

from .errors import DependentInput, DomainError, EmptyInput, PrecisionError
from .exactlinalg import RatMatrix, det_bareiss, pivot_columns
from .qseries import INFINITE, QSeries


class WronskianOutput:
    """The q-Wronskian series with its weight bookkeeping.

    The holomorphic-derivative Wronskian W differs from W_q by the nonzero
    scalar (2 pi i / h)^(k(k-1)/2); that transcendental factor is recorded
    as scalar_exponent only and never evaluated, so q-valuations and
    vanishing statements transfer verbatim.
    """

    __slots__ = ("series", "input_count", "input_weight", "output_weight",
                 "scalar_exponent")

    def __init__(self, series, input_count, input_weight):
        self.series = series
        self.input_count = input_count
        self.input_weight = input_weight
        self.output_weight = wronskian_weight(input_count, input_weight)
        self.scalar_exponent = scalar_exponent(input_count)

    def __repr__(self):
        return "WronskianOutput(k=%d, m=%d, weight=%d, %s)" % (
            self.input_count, self.input_weight, self.output_weight,
            self.series.qstring(4))


class SpanValuations:
    """The k distinct q-valuations attainable in the span of k independent
    series, and their sum."""

    __slots__ = ("valuations", "total")

    def __init__(self, valuations):
        self.valuations = tuple(valuations)
        self.total = sum(self.valuations)

    def __repr__(self):
        return "SpanValuations(%s, total=%d)" % (list(self.valuations), self.total)


def wronskian_weight(k, m):
    """Weight k(m + k - 1) of the q-Wronskian of k weight-m forms."""
    if k < 1:
        raise DomainError("need at least one input form")
    return k * (m + k - 1)


def scalar_exponent(k):
    """Exponent k(k-1)/2 of the scalar relating W and W_q."""
    if k < 1:
        raise DomainError("need at least one input form")
    return k * (k - 1) // 2


def _theta_tower(series, valuation_shift, height):
    """[(v + q d/dq)^i g for i in range(height)] for g = series, v = shift."""
    out = [series]
    for _ in range(height - 1):
        prev = out[-1]
        step = prev.q_derive()
        if valuation_shift:
            step = step + prev.scaled(valuation_shift)
        out.append(step)
    return out


def _det_laplace(rows, prec):
    """Determinant of a small series matrix by Laplace expansion along the
    first rows, memoizing minors over column subsets."""
    k = len(rows)
    memo = {}

    def minor(cols):
        if cols in memo:
            return memo[cols]
        r = k - len(cols)
        if not cols:
            return QSeries.one(prec)
        row = rows[r]
        total = QSeries.zero(prec)
        for pos, j in enumerate(cols):
            entry = row[j]
            if entry.is_zero():
                continue
            sub = minor(cols[:pos] + cols[pos + 1:])
            term = entry * sub
            total = total + (term if pos % 2 == 0 else -term)
        memo[cols] = total
        return total

    return minor(tuple(range(k)))


def _det_bareiss_series(rows, prec):
    """Fraction-free elimination on series entries with precision tracking.

    Each Bareiss division is exact in the untruncated ring, so exact_div is
    valid; when a pivot has positive valuation the quotient precision
    contracts and the result carries the correspondingly smaller guarantee.
    """
    k = len(rows)
    a = [list(r) for r in rows]
    sign = 1
    prev = None
    for col in range(k - 1):
        piv = next((i for i in range(col, k) if not a[i][col].is_zero()), None)
        if piv is None:
            working = min(x.prec for row in a for x in row)
            return QSeries.zero(working)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        for i in range(col + 1, k):
            for j in range(col + 1, k):
                num = a[i][j] * a[col][col] - a[i][col] * a[col][j]
                a[i][j] = num.exact_div(prev) if prev is not None else num
            a[i][col] = QSeries.zero(a[i][col].prec)
        prev = a[col][col]
    result = a[k - 1][k - 1]
    if sign < 0:
        result = -result
    return result


def _det_series(rows, k, prec):
    if k <= 8:
        return _det_laplace(rows, prec)
    return _det_bareiss_series(rows, prec)


def _reduced_columns(fs, height):
    """Strip each input's q-valuation and build its derivative tower.

    Returns (columns, valuations) where columns[j][i] = (v_j + theta)^i g_j
    with f_j = q^(v_j) g_j, or None in place of a column whose input is
    zero at its stored precision.
    """
    columns, vals = [], []
    for f in fs:
        v = f.valuation()
        if v == INFINITE:
            columns.append(None)
            vals.append(INFINITE)
            continue
        v = int(v)
        g = QSeries(f.coeffs[v:], f.prec - v)
        columns.append(_theta_tower(g, v, height))
        vals.append(v)
    return columns, vals


def q_wronskian(fs, m):
    """The q-Wronskian det[(q d/dq)^i f_j] of k = len(fs) series of common
    weight m, with guaranteed output precision equal to the common input
    precision."""
    k = len(fs)
    if k == 0:
        raise EmptyInput("q-Wronskian of an empty list")
    prec = min(f.prec for f in fs)
    if prec < k:
        raise PrecisionError(
            "common precision %d is below the matrix size %d" % (prec, k)
        )
    fs = [f.truncated(prec) for f in fs]
    if k == 1:
        return WronskianOutput(fs[0], 1, m)
    columns, vals = _reduced_columns(fs, k)
    if any(col is None for col in columns):
        # A column is zero modulo the stored precision, hence so is the
        # determinant.
        return WronskianOutput(QSeries.zero(prec), k, m)
    shift = sum(vals)
    reduced_prec = prec - max(vals)
    rows = [
        [columns[j][i].truncated(reduced_prec) for j in range(k)]
        for i in range(k)
    ]
    det = _det_series(rows, k, reduced_prec)
    series = det.shifted(shift).truncated(prec)
    return WronskianOutput(series, k, m)


def wronskian_valuation(fs):
    """Exact q-valuation of the q-Wronskian of fs, certified from the
    reduced determinant; works even when the valuation exceeds the stored
    precision of the inputs.

    Returns sum(v_j) + valuation(reduced determinant).  Raises
    PrecisionError when the reduced determinant vanishes at the available
    precision (the valuation cannot be certified), and DependentInput when
    an input is zero at its stored precision.
    """
    k = len(fs)
    if k == 0:
        raise EmptyInput("q-Wronskian of an empty list")
    prec = min(f.prec for f in fs)
    fs = [f.truncated(prec) for f in fs]
    if k == 1:
        v = fs[0].valuation()
        if v == INFINITE:
            raise PrecisionError(
                "series is zero modulo q^%d; valuation not certifiable" % prec
            )
        return int(v)
    columns, vals = _reduced_columns(fs, k)
    if any(col is None for col in columns):
        raise DependentInput(
            "an input vanishes at its stored precision: the list is either "
            "linearly dependent or the precision is insufficient"
        )
    shift = sum(vals)
    working = prec - max(vals)
    # With pairwise distinct valuations the constant term of the reduced
    # determinant is a Vandermonde multiple of the leading coefficients,
    # so the first probe almost always settles it.
    probe = 1
    while probe <= working:
        if probe == 1:
            constant = RatMatrix(
                [[columns[j][i].coeffs[0] for j in range(k)] for i in range(k)],
                cols=k,
            )
            if det_bareiss(constant) != 0:
                return shift
        else:
            rows = [
                [columns[j][i].truncated(probe) for j in range(k)]
                for i in range(k)
            ]
            det = _det_series(rows, k, probe)
            v = det.valuation()
            if v != INFINITE:
                return shift + int(v)
        if probe == working:
            break
        probe = min(probe * 4, working)
    raise PrecisionError(
        "reduced Wronskian determinant vanishes modulo q^%d: inputs are "
        "either linearly dependent or the precision is insufficient" % working
    )


def span_valuations(fs):
    """The k distinct valuations attainable in the span of fs, read off the
    pivot columns of the echelon form of the coefficient matrix."""
    k = len(fs)
    if k == 0:
        raise EmptyInput("span of an empty list")
    prec = min(f.prec for f in fs)
    matrix = RatMatrix([list(f.coeffs[:prec]) for f in fs], cols=prec)
    pivots = pivot_columns(matrix)
    if len(pivots) < k:
        raise DependentInput(
            "echelon rank %d < %d inputs: the series are either linearly "
            "dependent or the precision (%d) is insufficient to separate them"
            % (len(pivots), k, prec)
        )
    return SpanValuations(pivots)


def cusp_order_identity_check(fs, m):
    """Compare the q-valuation of the q-Wronskian (lhs) with the sum of the
    span valuations (rhs); the two are provably equal for any list of
    linearly independent forms."""
    w = q_wronskian(fs, m)
    lhs = w.series.valuation()
    if lhs == INFINITE:
        raise PrecisionError(
            "q-Wronskian vanishes modulo q^%d; increase the input precision"
            % w.series.prec
        )
    rhs = span_valuations(fs).total
    return int(lhs), rhs, int(lhs) == rhs


def elliptic_wronskian_order(span_total, k, e):
    """(span_total - k(k-1)/2)/e as an exact rational: the vanishing order
    of the Wronskian at an interior point of period e, given the span
    valuations total in the local coordinate."""
    if k < 1:
        raise DomainError("need at least one form")
    if e < 1:
        raise DomainError("period must be >= 1")
    return Fraction(span_total - k * (k - 1) // 2, e)
