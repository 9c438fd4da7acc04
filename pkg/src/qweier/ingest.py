"""Reading and writing q-expansion basis files (QEXP format).

The format is plain UTF-8 text: a five-line header

    QEXP 1
    LEVEL <label>
    WEIGHT <w>
    PREC <P>
    FORMS <k>

followed by k blocks of two lines each: ``FORM <label>`` and one line of P
space-separated rationals (``a`` or ``a/b`` with b > 0), the coefficients
of q^0 ... q^(P-1).  Lines starting with ``#`` are comments and blank
lines are skipped; everything else must appear in exactly this order.
"""

import re

from fractions import Fraction

from .errors import ParseError, ValidationError
from .qseries import QSeries
from .weierstrass import CuspBasis, ModularFormRecord

_RATIONAL = re.compile(r"-?\d+(/[1-9]\d*)?\Z")


class BasisFile:
    """The raw contents of a QEXP file: the header values and, per form,
    its label and coefficient list."""

    __slots__ = ("level_label", "weight", "prec", "forms")

    def __init__(self, level_label, weight, prec, forms):
        forms = [(label, list(coeffs)) for label, coeffs in forms]
        for label, coeffs in forms:
            if len(coeffs) != prec:
                raise ValidationError(
                    "form %r has %d coefficients, expected PREC = %d"
                    % (label, len(coeffs), prec))
        self.level_label = level_label
        self.weight = weight
        self.prec = prec
        self.forms = forms

    @property
    def form_count(self):
        return len(self.forms)

    def __eq__(self, other):
        if not isinstance(other, BasisFile):
            return NotImplemented
        return (self.level_label, self.weight, self.prec, self.forms) == (
            other.level_label, other.weight, other.prec, other.forms)

    def __repr__(self):
        return "BasisFile(%r, weight=%d, prec=%d, %d forms)" % (
            self.level_label, self.weight, self.prec, self.form_count)


def _meaningful_lines(text):
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield number, stripped


def _take(lines, what):
    try:
        return next(lines)
    except StopIteration:
        raise ParseError("file ended before %s" % what) from None


def _keyword_line(lines, keyword):
    number, line = _take(lines, "the %s line" % keyword)
    parts = line.split(None, 1)
    if parts[0] != keyword or len(parts) != 2:
        raise ParseError("expected '%s <value>'" % keyword, line=number)
    return number, parts[1].strip()


def _int_header(lines, keyword, minimum):
    number, value = _keyword_line(lines, keyword)
    try:
        out = int(value)
    except ValueError:
        raise ParseError(
            "%s value %r is not an integer" % (keyword, value), line=number
        ) from None
    if out < minimum:
        raise ParseError(
            "%s must be >= %d, got %d" % (keyword, minimum, out), line=number)
    return out


def parse_basis_file(text):
    """Parse QEXP text into a BasisFile, without interpreting the forms."""
    lines = _meaningful_lines(text)
    number, magic = _take(lines, "the QEXP header")
    if magic != "QEXP 1":
        raise ParseError(
            "not a QEXP file: first line must be 'QEXP 1'", line=number)
    _, level_label = _keyword_line(lines, "LEVEL")
    weight = _int_header(lines, "WEIGHT", 0)
    prec = _int_header(lines, "PREC", 0)
    count = _int_header(lines, "FORMS", 0)
    forms = []
    for _ in range(count):
        number, line = _take(lines, "a FORM line (%d expected)" % count)
        parts = line.split(None, 1)
        if parts[0] != "FORM" or len(parts) != 2:
            raise ParseError("expected 'FORM <label>'", line=number)
        label = parts[1].strip()
        number, line = _take(lines, "the coefficients of %r" % label)
        tokens = line.split()
        coeffs = []
        for tok in tokens:
            if not _RATIONAL.match(tok):
                raise ParseError(
                    "bad rational %r in form %r (use 'a' or 'a/b' with "
                    "b > 0)" % (tok, label), line=number)
            coeffs.append(Fraction(tok))
        if len(coeffs) != prec:
            raise ValidationError(
                "form %r has %d coefficients on line %d, expected PREC = %d"
                % (label, len(coeffs), number, prec))
        forms.append((label, coeffs))
    for number, line in lines:
        raise ParseError("unexpected content after the last form", line=number)
    return BasisFile(level_label, weight, prec, forms)


def serialize(basis_file):
    """Render a BasisFile back to QEXP text (no comments; exact round-trip
    of the values)."""
    out = [
        "QEXP 1",
        "LEVEL %s" % basis_file.level_label,
        "WEIGHT %d" % basis_file.weight,
        "PREC %d" % basis_file.prec,
        "FORMS %d" % basis_file.form_count,
    ]
    for label, coeffs in basis_file.forms:
        out.append("FORM %s" % label)
        out.append(" ".join(str(c) for c in coeffs))
    return "\n".join(out) + "\n"


def parse_basis(text):
    """Parse QEXP text and validate it as a weight-2 cusp-form basis."""
    bf = parse_basis_file(text)
    records = [
        ModularFormRecord(
            label, QSeries(coeffs, bf.prec), bf.weight, bf.level_label)
        for label, coeffs in bf.forms
    ]
    return CuspBasis(bf.level_label, records)


def load_basis(path):
    """parse_basis on the contents of a file."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_basis(fh.read())
