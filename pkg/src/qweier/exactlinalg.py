"""Exact rational matrices, sorted integral Gaussian elimination with a
transformation matrix, and fraction-free determinants.

The elimination strategy: repeatedly sort rows by number of leading zeros
(ties broken by original row index), then cancel the leading coefficient of
every row that shares its pivot column with its predecessor.  Repeat until
no two adjacent rows share a pivot, then content-normalize every row to
coprime integer entries with a positive leading entry, so the output is
canonical.  Zero rows sort last and keep their transformation rows, which
encode exact linear relations among the inputs.
"""

from fractions import Fraction
from math import gcd

from .errors import ShapeError


class RatMatrix:
    """Immutable r x c matrix of exact rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols=None):
        entries = [tuple(Fraction(x) for x in row) for row in entries]
        if entries:
            cols = len(entries[0]) if cols is None else cols
            for row in entries:
                if len(row) != cols:
                    raise ShapeError("ragged rows: expected %d columns" % cols)
        elif cols is None:
            cols = 0
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(entries))

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    @staticmethod
    def identity(n):
        return RatMatrix(
            [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)],
            cols=n,
        )

    def row(self, i):
        return self.entries[i]

    def mul(self, other):
        if self.cols != other.rows:
            raise ShapeError(
                "cannot multiply %dx%d by %dx%d"
                % (self.rows, self.cols, other.rows, other.cols)
            )
        out = []
        for i in range(self.rows):
            a = self.entries[i]
            out.append(
                [
                    sum((a[k] * other.entries[k][j] for k in range(self.cols)),
                        Fraction(0))
                    for j in range(other.cols)
                ]
            )
        return RatMatrix(out, cols=other.cols)

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (
            other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return "RatMatrix(%d x %d)" % (self.rows, self.cols)


class EchelonResult:
    """Echelon form together with the transformation that produced it.

    transform * input = echelon exactly; transform is invertible; pivots
    are the leading-entry columns of the nonzero rows, strictly increasing;
    rank = number of nonzero rows.
    """

    __slots__ = ("echelon", "transform", "pivots", "rank")

    def __init__(self, echelon, transform, pivots, rank):
        self.echelon = echelon
        self.transform = transform
        self.pivots = pivots
        self.rank = rank


def _leading_zeros(row, cols):
    for j, x in enumerate(row):
        if x != 0:
            return j
    return cols


def _content(ints):
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
        if g == 1:
            return 1
    return g


def _primitive(frac_row, signed_by):
    """The unique primitive-integer multiple of frac_row whose entry at
    index signed_by is positive, together with the factor applied."""
    den = 1
    for x in frac_row:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in frac_row]
    g = _content(ints)
    if g == 0:
        return [Fraction(0)] * len(frac_row), Fraction(0)
    if ints[signed_by] < 0:
        g = -g
    return [Fraction(x, g) for x in ints], Fraction(den, g)


def echelon_reduce(m, want_transform=True):
    """Sorted Gaussian elimination with transformation tracking.

    Scheduling: repeatedly sort rows by leading-zero count (ties by
    original row index) and cancel the leading coefficient of every row
    sharing its pivot column with its predecessor; repeat to a fixed
    point; content-normalize at the end.

    Working rows are kept monic (divided by their leading coefficient
    after every cancellation) rather than integral.  Per-row rescaling by
    a nonzero scalar is invisible to this algorithm: leading-zero counts,
    tie-breaking, and the cancellation pattern are all scale-independent,
    cancellation is homogeneous of degree one in each of the two rows
    involved, and the final normalization (integer entries with content 1
    and positive leading entry, the transformation row scaled along)
    erases any leftover factor.  So the output is identical to running the
    cross-multiplication form of the same schedule, while reduced-fraction
    arithmetic keeps entry sizes near the sizes of the answer instead of
    compounding with every cancellation.

    With want_transform=False the transformation matrix is skipped (the
    result's transform is None): substantially faster when only the rank
    or the pivot columns are needed, since transformation rows are as wide
    as the input is tall.
    """
    r, c = m.rows, m.cols
    if r == 0:
        return EchelonResult(
            m, RatMatrix.identity(0) if want_transform else None, [], 0)

    rows = [list(row) for row in m.entries]
    trows = [
        [Fraction(1 if j == i else 0) for j in range(r)] for i in range(r)
    ] if want_transform else None
    for i in range(r):
        p = _leading_zeros(rows[i], c)
        if p < c and rows[i][p] != 1:
            lead = rows[i][p]
            rows[i] = [x / lead for x in rows[i]]
            if want_transform:
                trows[i] = [x / lead for x in trows[i]]
    orig = list(range(r))

    while True:
        order = sorted(range(r), key=lambda i: (_leading_zeros(rows[i], c), orig[i]))
        rows = [rows[i] for i in order]
        orig = [orig[i] for i in order]
        if want_transform:
            trows = [trows[i] for i in order]
        changed = False
        for i in range(1, r):
            p = _leading_zeros(rows[i], c)
            if p < c and p == _leading_zeros(rows[i - 1], c):
                # Both rows are monic at column p, so the cancellation
                # a*x - b*y collapses to a subtraction.
                row = [x - y for x, y in zip(rows[i], rows[i - 1])]
                trow = (
                    [x - y for x, y in zip(trows[i], trows[i - 1])]
                    if want_transform else None
                )
                q = _leading_zeros(row, c)
                if q < c and row[q] != 1:
                    lead = row[q]
                    row = [x / lead for x in row]
                    if want_transform:
                        trow = [x / lead for x in trow]
                rows[i] = row
                if want_transform:
                    trows[i] = trow
                changed = True
        if not changed:
            break

    pivots = []
    ech, tr = [], []
    for i in range(r):
        p = _leading_zeros(rows[i], c)
        if p < c:
            row, factor = _primitive(rows[i], p)
            ech.append(row)
            if want_transform:
                tr.append([x * factor for x in trows[i]])
            pivots.append(p)
        else:
            ech.append([Fraction(0)] * c)
            if want_transform:
                # Zero row: normalize its relation row by content and
                # sign (it encodes an exact dependence among the inputs).
                lead = next(
                    (j for j, x in enumerate(trows[i]) if x != 0), None)
                if lead is None:
                    tr.append(list(trows[i]))
                else:
                    tr.append(_primitive(trows[i], lead)[0])
    return EchelonResult(
        RatMatrix(ech, cols=c),
        RatMatrix(tr, cols=r) if want_transform else None,
        pivots,
        len(pivots),
    )


def pivot_columns(m):
    """Pivot columns of the reduced row echelon form, by single-sweep
    elimination with immediate back-substitution.

    The pivot column set is algorithm-independent (column j is a pivot
    exactly when it enlarges the rank of the columns to its left), so this
    agrees with echelon_reduce(m).pivots while staying fast on tall
    matrices: the multi-pass sorted schedule re-scans rows every pass,
    which this routine avoids.  Row content is not computed here; use
    echelon_reduce when the actual rows or the transformation matter.
    """
    pivrows = {}
    for row in m.entries:
        row = list(row)
        for p in sorted(pivrows):
            x = row[p]
            if x:
                piv = pivrows[p]
                for j in range(p, m.cols):
                    row[j] -= x * piv[j]
        lead = next((j for j, x in enumerate(row) if x), None)
        if lead is not None:
            val = row[lead]
            pivrows[lead] = [x / val for x in row]
    return sorted(pivrows)


def rank(m):
    return len(pivot_columns(m))


def det_bareiss(m):
    """Exact determinant by fraction-free elimination after clearing
    denominators rowwise."""
    if m.rows != m.cols:
        raise ShapeError("determinant of a %dx%d matrix" % (m.rows, m.cols))
    n = m.rows
    if n == 0:
        return Fraction(1)
    scale = 1
    a = []
    for i in range(n):
        den = 1
        for x in m.entries[i]:
            den = den * x.denominator // gcd(den, x.denominator)
        scale *= den
        a.append([int(x * den) for x in m.entries[i]])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - aik * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1], scale)
