"""Command-line surface.

Subcommands:

  signature <N>                         invariants of Gamma_0(N)
  dims <N|sigfile> <m>                  dimension and degree table
  level1 verify --tmax T [--prec P]     Wronskian identities for SL(2,Z)
  wronskian <basisfile> [--weight m]    q-Wronskian valuation bookkeeping
  weierstrass <basisfile> --weight m [--level N]
                                        Weierstrass-point test at the cusp

Exit codes: 0 on success, 1 on any engine error or a failed verification,
2 on usage errors.  All output is deterministic for fixed inputs.
"""

import argparse
import re
import sys

from .errors import ParseError, QweierError
from .ingest import load_basis, parse_basis_file
from .level1 import (
    Level1Form,
    MonomialExponent,
    delta,
    eisenstein_e4,
    eisenstein_e6,
    express_in_monomials,
)
from .qseries import QSeries
from .surface import (
    GENUS_LT_2,
    HYPERELLIPTIC,
    NOT_HYPERELLIPTIC,
    SurfaceSignature,
    deg_c,
    deg_c_prime,
    dim_cusp_forms,
    dim_modular_forms,
    dim_s_h,
    gamma0_invariants,
)
from .weierstrass import SPAN_NOT_GUARANTEED, weierstrass_test
from .wronskian import (
    q_wronskian,
    span_valuations,
    wronskian_valuation,
    wronskian_weight,
)

#: Terms shown per echelon row before eliding with "...".
_ROW_TERMS = 8


def _print(out, line=""):
    out.write(line + "\n")


def format_gaps(gaps):
    """Render a sorted integer sequence compactly: runs of three or more
    become 'a..b', everything else is listed, comma-separated."""
    if not gaps:
        return "(empty)"
    parts = []
    i = 0
    while i < len(gaps):
        j = i
        while j + 1 < len(gaps) and gaps[j + 1] == gaps[j] + 1:
            j += 1
        if j - i >= 2:
            parts.append("%d..%d" % (gaps[i], gaps[j]))
        else:
            parts.extend(str(g) for g in gaps[i : j + 1])
        i = j + 1
    return ", ".join(parts)


def _hyperelliptic_word(status):
    if status == HYPERELLIPTIC:
        return "yes"
    if status == NOT_HYPERELLIPTIC:
        return "no"
    return "not applicable (genus < 2)"


# -- signature ------------------------------------------------------------


def _cmd_signature(args, out):
    inv = gamma0_invariants(args.level)
    _print(out, "Gamma_0(%d)" % inv.level)
    rows = [
        ("index", str(inv.index)),
        ("nu_2", str(inv.nu2)),
        ("nu_3", str(inv.nu3)),
        ("cusps", str(inv.signature.cusp_count)),
        ("genus", str(inv.signature.genus)),
        ("hyperelliptic", _hyperelliptic_word(inv.hyperelliptic_status)),
    ]
    for name, value in rows:
        _print(out, "  %-14s %s" % (name, value))
    return 0


# -- dims -----------------------------------------------------------------


def _parse_signature_file(path):
    """A signature file has lines 'GENUS g', 'CUSPS t', and optionally
    'ELLIPTIC e1 e2 ...'; '#' comments and blank lines are ignored."""
    with open(path, "r", encoding="utf-8") as handle:
        lines = handle.read().splitlines()
    fields = {}
    for number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        if key not in ("GENUS", "CUSPS", "ELLIPTIC") or key in fields:
            raise ParseError(
                "line %d: expected one GENUS, CUSPS, or ELLIPTIC line, got %r"
                % (number, raw)
            )
        try:
            fields[key] = [int(tok) for tok in rest.split()]
        except ValueError:
            raise ParseError("line %d: non-integer value in %r" % (number, raw))
    for key in ("GENUS", "CUSPS"):
        if key not in fields or len(fields[key]) != 1:
            raise ParseError("signature file needs a single-value %s line" % key)
    return SurfaceSignature(
        fields["GENUS"][0], fields["CUSPS"][0], tuple(fields.get("ELLIPTIC", ()))
    )


def _cmd_dims(args, out):
    if re.fullmatch(r"\d+", args.group):
        sig = gamma0_invariants(int(args.group)).signature
    else:
        sig = _parse_signature_file(args.group)
    m = args.weight
    _print(
        out,
        "dim S_%d = %d, dim S^H_%d = %d, dim M_%d = %d, deg c' = %d, deg c = %d"
        % (
            m,
            dim_cusp_forms(sig, m),
            m,
            dim_s_h(sig, m),
            m,
            dim_modular_forms(sig, m),
            deg_c_prime(sig, m),
            deg_c(sig, m),
        ),
    )
    return 0


# -- level1 verify ----------------------------------------------------------


def _cmd_level1(args, out):
    prec = args.prec
    e4 = eisenstein_e4(prec).series
    e6 = eisenstein_e6(prec).series
    dlt = delta(prec).series
    a, b = e4 ** 3, e6 ** 2
    for t in range(1, args.tmax + 1):
        fs = [a ** u * b ** (t - u) for u in range(t, -1, -1)]
        w = q_wronskian(fs, 12 * t)
        half = t * (t + 1) // 2
        quotient = w.series.exact_div(dlt ** half)
        rest_weight = w.output_weight - 12 * half
        combo = express_in_monomials(Level1Form(quotient, rest_weight))
        expected = MonomialExponent(t * (t + 1), half)
        if len(combo) != 1 or combo[0][0] != expected:
            _print(
                out,
                "t = %d: FAILED (quotient by Delta^%d is not a multiple of "
                "E4^%d * E6^%d)" % (t, half, expected.alpha, expected.beta),
            )
            return 1
        _print(out, "lambda(%d) = %s" % (t, combo[0][1]))
    _print(
        out,
        "level1 verify: OK for t = 1..%d "
        "(W_q = lambda * Delta^(t(t+1)/2) * E4^(t(t+1)) * E6^(t(t+1)/2))"
        % args.tmax,
    )
    return 0


# -- wronskian --------------------------------------------------------------


def _load_series(path):
    """Read a QEXP file as raw (label, QSeries) pairs plus its headers,
    without the cusp-basis validation."""
    with open(path, "r", encoding="utf-8") as handle:
        basis_file = parse_basis_file(handle.read())
    series = [QSeries(coeffs, basis_file.prec) for _, coeffs in basis_file.forms]
    return basis_file, series


def _cmd_wronskian(args, out):
    basis_file, series = _load_series(args.basisfile)
    weight = args.weight if args.weight is not None else basis_file.weight
    k = len(series)
    _print(
        out,
        "forms: %d, weight %d, precision %d" % (k, weight, basis_file.prec),
    )
    _print(out, "q-Wronskian weight: %d" % wronskian_weight(k, weight))
    spans = span_valuations(series)
    _print(
        out,
        "span valuations: %s (total %d)"
        % (" ".join(str(v) for v in spans.valuations), spans.total),
    )
    val = wronskian_valuation(series)
    _print(out, "q-Wronskian valuation: %d" % val)
    if val == spans.total:
        _print(out, "cusp-order identity: OK (%d = %d)" % (val, spans.total))
        return 0
    _print(out, "cusp-order identity: FAILED (%d != %d)" % (val, spans.total))
    return 1


# -- weierstrass ------------------------------------------------------------


def _cmd_weierstrass(args, out):
    basis = load_basis(args.basisfile)
    genus = len(basis.forms)
    notes = []
    if args.level is not None:
        inv = gamma0_invariants(args.level)
        sig = inv.signature
        status = inv.hyperelliptic_status
        header = "Gamma_0(%d): genus %d, %d cusps, hyperelliptic: %s" % (
            inv.level,
            sig.genus,
            sig.cusp_count,
            _hyperelliptic_word(status),
        )
    else:
        sig = SurfaceSignature(genus, 1)
        header = "%s: genus %d (from form count)" % (basis.level_label, genus)
        if genus == 2:
            status = HYPERELLIPTIC
            notes.append(
                "note: no --level given; genus 2, hence a hyperelliptic curve"
            )
        else:
            status = NOT_HYPERELLIPTIC
            notes.append(
                "note: no --level given; assuming a non-hyperelliptic curve "
                "and a one-cusp signature (only the genus enters the test)"
            )
    _print(out, header)
    for note in notes:
        _print(out, note)
    report = weierstrass_test(basis, args.weight, sig, hyperelliptic_status=status)
    _print(
        out,
        "weight m = %d: %d monomials of degree %d, expected dim %d, rank %d"
        % (
            report.m,
            report.monomial_count,
            report.m // 2,
            report.expected_dim,
            report.rank,
        ),
    )
    _print(out, "gap sequence %s" % format_gaps(report.gap_sequence))
    _print(
        out,
        "the cusp at infinity %s a %d-Weierstrass point of this curve"
        % ("IS" if report.is_weierstrass else "is NOT", report.m // 2),
    )
    if SPAN_NOT_GUARANTEED in report.flags:
        _print(
            out,
            "warning: hyperelliptic curve with rank below the expected "
            "dimension; the computed span may be a proper subspace and the "
            "verdict is not certified",
        )
    _print(out, "echelon rows:")
    for row in report.rows:
        _print(out, "  %s" % row.qstring(max_terms=_ROW_TERMS))
    return 0


# -- dispatch ---------------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="qweier",
        description="Exact q-expansion arithmetic, Wronskians, and "
        "Weierstrass-point tests for modular curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sig = sub.add_parser("signature", help="invariants of Gamma_0(N)")
    p_sig.add_argument("level", type=int, metavar="N")

    p_dims = sub.add_parser("dims", help="dimension and degree table")
    p_dims.add_argument("group", metavar="N|sigfile")
    p_dims.add_argument("weight", type=int, metavar="m")

    p_l1 = sub.add_parser("level1", help="full-modular-group checks")
    p_l1.add_argument("action", choices=["verify"])
    p_l1.add_argument("--tmax", type=int, required=True, metavar="T")
    p_l1.add_argument("--prec", type=int, default=40, metavar="P")

    p_wr = sub.add_parser("wronskian", help="q-Wronskian of a basis file")
    p_wr.add_argument("basisfile")
    p_wr.add_argument("--weight", type=int, default=None, metavar="m")

    p_ws = sub.add_parser(
        "weierstrass", help="Weierstrass-point test at the cusp at infinity"
    )
    p_ws.add_argument("basisfile")
    p_ws.add_argument("--weight", type=int, required=True, metavar="m")
    p_ws.add_argument("--level", type=int, default=None, metavar="N")

    return parser


_HANDLERS = {
    "signature": _cmd_signature,
    "dims": _cmd_dims,
    "level1": _cmd_level1,
    "wronskian": _cmd_wronskian,
    "weierstrass": _cmd_weierstrass,
}


def cli_dispatch(argv, out=None, err=None):
    """Run one CLI invocation and return its exit code.

    Usage errors follow argparse convention and raise SystemExit(2).
    """
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    args = _build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args, out)
    except QweierError as exc:
        err.write("error: %s\n" % exc)
        return 1
    except OSError as exc:
        err.write("error: %s\n" % exc)
        return 1


def main():
    sys.exit(cli_dispatch(sys.argv[1:]))
