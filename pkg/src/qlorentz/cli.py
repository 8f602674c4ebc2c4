"""Command-line front end.

Exit codes: 0 success, 1 an identity failed, 2 bad input (parse or flag
error), 3 domain error.  A rational ``--q`` computes exactly; ``--exact``
additionally insists on it and prints exact values in every format.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from . import coordalg, functionals, identities, so3q, spectra
from .parsing import ParseError, parse_expression
from .spectra import DomainError
from .tensors import quantum_metric

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

COMMANDS = ("normal-order", "metric", "rmatrix", "identities", "spectrum", "lightcone", "boost", "lifetime", "so3", "sphere")
SPECTRUM_COLUMNS = ("l", "m", "gamma", "x3", "v3", "vsq", "E", "p3")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _number(text: str):
    try:
        return spectra.as_number(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")


def _half_integer(text: str) -> Fraction:
    try:
        x = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a half-integer: {text!r}")
    if (2 * x).denominator != 1:
        raise argparse.ArgumentTypeError(f"not a half-integer: {text!r}")
    return x


def _sign(text: str) -> int:
    table = {"+": 1, "+1": 1, "1": 1, "plus": 1, "-": -1, "-1": -1, "minus": -1}
    if text not in table:
        raise argparse.ArgumentTypeError("sign must be + or -")
    return table[text]


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--q", type=_number, default=Fraction(3, 2), help="deformation parameter (rational = exact)")
    common.add_argument("--t", type=_number, default=Fraction(1), help="time eigenvalue")
    common.add_argument("--mass", type=_number, default=None)
    common.add_argument("--tau2", type=_number, default=Fraction(0))
    common.add_argument("--l-max", type=_half_integer, default=Fraction(1))
    common.add_argument("--n-max", type=int, default=5)
    common.add_argument("--kappa", type=_number, default=0.01)
    common.add_argument("--format", choices=("csv", "json", "text"), default="text")
    common.add_argument("--exact", action="store_true", help="require rational --q and print exact values")

    p = _Parser(prog="qlorentz", description="Quantum Lorentz group and q-Minkowski space computations.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("normal-order", parents=[common], help="normal-order a coordinate expression")
    s.add_argument("expression")
    s.add_argument("--casimir", action="store_true", help="replace tau2 by the Casimir first")

    for name in ("metric", "rmatrix"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("--sign", type=_sign, default=1)

    s = sub.add_parser("identities", parents=[common], help="run the identity catalog")
    s.add_argument("--all", action="store_true")
    s.add_argument("--id", action="append", default=[], choices=[i.value for i in identities.IdentityId])

    sub.add_parser("spectrum", parents=[common], help="quantized boost spectrum up to --l-max")
    sub.add_parser("lightcone", parents=[common], help="light-cone eigenvalues up to --n-max")

    s = sub.add_parser("boost", parents=[common])
    s.add_argument("--l", type=_half_integer, required=True)
    s.add_argument("--m", type=_half_integer, required=True)

    s = sub.add_parser("lifetime", parents=[common])
    s.add_argument("--v", type=float, required=True, help="classical velocity |v| < 1")
    s.add_argument("--sign", type=_sign, default=1, help="q = 1 + sign*kappa")

    sub.add_parser("so3", parents=[common])
    sub.add_parser("sphere", parents=[common])
    return p


# -- formatting --------------------------------------------------------------------------


class Formatter:
    def __init__(self, exact: bool):
        self.exact = exact

    def text(self, x) -> str:
        if x is None:
            return ""
        if isinstance(x, int):
            return str(x)
        if isinstance(x, Fraction):
            if self.exact:
                return str(x)
            return repr(float(x))
        return repr(float(x))

    def json_value(self, x):
        if x is None:
            return None
        if isinstance(x, int):
            return x
        if self.exact and isinstance(x, Fraction):
            return str(x)
        return float(x)


def _emit_table(rows: list[dict], columns: Sequence[str], fmt: str, f: Formatter, out: TextIO) -> None:
    if fmt == "json":
        json.dump([{c: f.json_value(r.get(c)) for c in columns} for r in rows], out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([f.text(r.get(c)) for c in columns])
        out.write(buf.getvalue())
    else:
        cells = [list(columns)] + [[f.text(r.get(c)) for c in columns] for r in rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
        for row in cells:
            out.write("  ".join(v.rjust(w) for v, w in zip(row, widths)).rstrip() + "\n")


def _emit_record(record: dict, fmt: str, f: Formatter, out: TextIO) -> None:
    if fmt == "text":
        for k, v in record.items():
            out.write(f"{k} = {v if isinstance(v, str) else f.text(v)}\n")
    else:
        _emit_table([record], list(record), fmt, f, out)


# -- commands --------------------------------------------------------------------------------


def cmd_normal_order(a, f, out) -> int:
    p = parse_expression(a.expression)
    if a.casimir:
        p = coordalg.substitute_casimir(p)
    out.write(f"{coordalg.normal_order(p)}\n")
    return EXIT_OK


def cmd_metric(a, f, out) -> int:
    G, Gl = quantum_metric(a.sign)
    if a.format == "json":
        json.dump({"upper": G.to_json(), "lower": Gl.to_json()}, out, indent=2)
        out.write("\n")
        return EXIT_OK
    for label, T in (("G^", G), ("G_", Gl)):
        for i in range(4):
            for j in range(4):
                out.write(f"{label}{i}{j} {T[i, j]}\n")
    return EXIT_OK


def cmd_rmatrix(a, f, out) -> int:
    R = functionals.big_R(a.sign)
    for N in range(4):
        for M in range(4):
            for K in range(4):
                for L in range(4):
                    out.write(f"{N} {M} {K} {L} {R[N, M, K, L]}\n")
    return EXIT_OK


def cmd_identities(a, f, out) -> int:
    if not a.all and not a.id:
        raise UsageError("identities: give --all or at least one --id")
    only = None if a.all else [identities.IdentityId(i) for i in a.id]
    results = identities.run_all(a.q, only)
    for r in results:
        out.write(r.line() + "\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def cmd_spectrum(a, f, out) -> int:
    params = spectra.Params(a.q, a.t, mass=a.mass)
    rows = [r.as_dict() for r in spectra.spectrum(a.l_max, params)]
    _emit_table(rows, SPECTRUM_COLUMNS, a.format, f, out)
    return EXIT_OK


def cmd_lightcone(a, f, out) -> int:
    if a.n_max < 0:
        raise DomainError("--n-max must be non-negative")
    rows = [{"n": n, "x3": spectra.lightcone_spectrum(n, a.t, a.q)} for n in range(a.n_max + 1)]
    _emit_table(rows, ("n", "x3"), a.format, f, out)
    if a.format == "text":
        st = spectra.stable_state_check(a.t, a.q)
        out.write(f"stable x3 = {f.text(st.x3)} q^2 v3^2 = {f.text(st.q2v3sq)} {'PASS' if st.ok else 'FAIL'}\n")
    return EXIT_OK


def cmd_boost(a, f, out) -> int:
    label = spectra.BoostLabel(a.l, a.m)
    ev = spectra.boost_event(spectra.Params(a.q, a.t, mass=a.mass), label)
    rec = {"l": label.l, "m": label.m, "gamma": spectra.gamma_l(label.l, a.q), "t_prime": ev.t_prime, "x3_prime": ev.x3_prime}
    if a.mass is not None:
        rec.update(E=ev.E, p3=ev.p3)
    _emit_record(rec, a.format, f, out)
    return EXIT_OK


def cmd_lifetime(a, f, out) -> int:
    t = float(a.t)
    kappa = float(a.kappa)
    rep = spectra.lifetime_report(t, a.v, kappa, a.sign)
    rec = {
        "v_cl": a.v,
        "kappa": kappa,
        "q": 1 + a.sign * kappa,
        "exact_shift": rep.exact,
        "first_order": rep.first_order,
        "residual": rep.residual,
        "residual_ratio": rep.ratio,
        "derived_sign": rep.derived_sign,
    }
    _emit_record(rec, a.format, Formatter(False), out)
    return EXIT_OK


def cmd_so3(a, f, out) -> int:
    rep = so3q.so3_report()
    for line in rep.lines():
        out.write(line + "\n")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_sphere(a, f, out) -> int:
    p = so3q.sphere_parameters(a.t, a.tau2, a.q)
    _emit_record({"lambda": p.lam, "rho": p.rho}, a.format, f, out)
    ok = True
    if a.format == "text":
        for c in so3q.sphere_closure():
            ok &= c.ok
            out.write(f"{c.name} {'PASS' if c.ok else 'FAIL ' + str(c.difference)}\n")
    return EXIT_OK if ok else EXIT_FAIL


HANDLERS = {
    "normal-order": cmd_normal_order,
    "metric": cmd_metric,
    "rmatrix": cmd_rmatrix,
    "identities": cmd_identities,
    "spectrum": cmd_spectrum,
    "lightcone": cmd_lightcone,
    "boost": cmd_boost,
    "lifetime": cmd_lifetime,
    "so3": cmd_so3,
    "sphere": cmd_sphere,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        a = build_parser().parse_args(argv)
        exact = spectra._exact(a.q)
        if a.exact and not exact:
            raise UsageError("--exact needs a rational --q such as 3/2")
        if a.q <= 0:
            raise DomainError("--q must be positive")
        if a.t < 0:
            raise DomainError("--t must be non-negative")
        return HANDLERS[a.command](a, Formatter(exact and (a.exact or a.format != "csv")), out)
    except (UsageError, ParseError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (DomainError, ArithmeticError, ValueError) as exc:
        err.write(f"domain error: {exc}\n")
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())
