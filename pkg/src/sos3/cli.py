"""Command-line front end.

Commands: ``prove`` (full certificate), ``check`` (individual check
groups), ``jac`` (Jacobian arithmetic on the family's odd-degree model or a
user-supplied curve), ``xi`` (descent class tuples), ``richelot`` (the
(2,2)-dual construction), ``identity`` (the product identity verifier) and
``psd`` (positive-semidefiniteness of a rational function).

All numeric inputs are exact rational literals (``p/q`` or integers); no
floats are accepted.  ``--json`` switches every command to structured
output; ``--out FILE`` writes the result to a file as well.  The ``SOS3_LOG``
environment variable sets the logging verbosity (e.g. ``DEBUG``).

Exit codes: 0 for success (``prove``: verdict PROVED), 2 for a negative or
inconclusive verdict, 1 for input errors.
"""

from __future__ import annotations

import json
import logging
import os
import re
import sys

import click

from .exact import Poly, Q
from .funcfield import format_ratfunc, is_psd, parse_ratfunc
from .jacobian import (
    MumfordDivisor,
    cantor_add,
    format_divisor,
    format_polyy,
    identity_divisor,
    negate,
    new_curve,
    parse_divisor,
    parse_polyy,
    polyy,
    scalar_mul,
)
from .descent import richelot_dual, schaefer_context, xi
from .family import (
    FamilyParams,
    build_family,
    check_nonsquares,
    check_nonvanishing,
    check_positivity,
    descent_certificate,
    prove_not_sos3,
    tilde_split,
    torsion_certificate,
    verify_sos3_identity,
)

log = logging.getLogger("sos3")

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


class RationalParam(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, type(Q(1))):
            return value
        if not _RATIONAL_RE.match(str(value).strip()):
            self.fail(f"{value!r} is not an exact rational literal (p/q)",
                      param, ctx)
        return Q(str(value).strip())


RATIONAL = RationalParam()


def _emit(text: str, out):
    click.echo(text, nl=not text.endswith("\n"))
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


@click.group()
def cli():
    level = os.environ.get("SOS3_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING))


def _param_options(f):
    for name in ("rho", "omega", "eta"):
        f = click.option(f"--{name}", required=True, type=RATIONAL)(f)
    return f


@cli.command()
@_param_options
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", type=click.Path(dir_okay=False))
def prove(eta, omega, rho, as_json, out):
    """Produce the full not-a-sum-of-three-squares certificate."""
    log.info("prove eta=%s omega=%s rho=%s", eta, omega, rho)
    cert = prove_not_sos3(FamilyParams(eta, omega, rho))
    _emit(cert.to_json() if as_json else cert.to_text(), out)
    raise SystemExit(0 if cert.verdict == "PROVED" else 2)


_GROUPS = {
    "positivity": check_positivity,
    "nonvanishing": check_nonvanishing,
    "nonsquares": check_nonsquares,
    "torsion": torsion_certificate,
    "descent": descent_certificate,
}


@cli.command()
@click.argument("group", type=click.Choice(sorted(_GROUPS)))
@_param_options
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", type=click.Path(dir_okay=False))
def check(group, eta, omega, rho, as_json, out):
    """Run one group of certificate checks."""
    try:
        inst = build_family(FamilyParams(eta, omega, rho))
    except ValueError as exc:
        raise click.ClickException(str(exc))
    checks = _GROUPS[group](inst)
    if as_json:
        text = json.dumps([{"id": c.id, "statement": c.statement,
                            "status": "pass" if c.passed else "fail",
                            "witness": c.witness} for c in checks], indent=2)
    else:
        text = "\n".join(f"[{'PASS' if c.passed else 'FAIL'}] {c.id}: "
                         f"{c.statement} -- witness: {c.witness}"
                         for c in checks)
    _emit(text, out)
    raise SystemExit(0 if all(c.passed for c in checks) else 2)


def _family_curve(eta, omega, rho):
    inst = build_family(FamilyParams(eta, omega, rho))
    m = inst.tilde
    g1, g2, g3 = tilde_split(inst)
    curve = m.tilde_curve
    named = {
        "id": identity_divisor(curve),
        "g1": MumfordDivisor(curve, g1, Poly()),
        "g2": MumfordDivisor(curve, g2, Poly()),
        "g1g2": MumfordDivisor(curve, g1 * g2, Poly()),
        "T": MumfordDivisor(curve, polyy([-m.d, 1]), Poly([8 * m.d ** 3])),
    }
    return curve, named


def _read_divisor(text, curve, named):
    text = text.strip()
    if text in named:
        return named[text]
    try:
        return parse_divisor(text, curve)
    except ValueError as exc:
        raise click.ClickException(f"bad divisor {text!r}: {exc}")


def _alias(D, named):
    for name, pt in named.items():
        if pt.u == D.u and pt.v == D.v:
            return name
    return None


@cli.command()
@click.argument("op", type=click.Choice(["add", "neg", "mul"]))
@click.argument("operands", nargs=-1)
@_param_options
@click.option("--curve-file", type=click.Path(exists=True, dir_okay=False),
              help="polynomial f of a custom curve t^2 = f(s); replaces the "
                   "family model (named points are then unavailable)")
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", type=click.Path(dir_okay=False))
def jac(op, operands, eta, omega, rho, curve_file, as_json, out):
    """Jacobian arithmetic.  Operands are named points (id, g1, g2, g1g2, T
    on the family model) or literal divisors ``<u ; v>`` in the variable s
    with rational-function coefficients in x."""
    if curve_file:
        with open(curve_file) as fh:
            curve = new_curve(parse_polyy(fh.read().strip()))
        named = {"id": identity_divisor(curve)}
    else:
        curve, named = _family_curve(eta, omega, rho)
    try:
        if op == "mul":
            if len(operands) != 2:
                raise click.ClickException("mul needs an integer and a divisor")
            n = int(operands[0])
            result = scalar_mul(n, _read_divisor(operands[1], curve, named))
        elif op == "neg":
            if len(operands) != 1:
                raise click.ClickException("neg needs one divisor")
            result = negate(_read_divisor(operands[0], curve, named))
        else:
            if len(operands) != 2:
                raise click.ClickException("add needs two divisors")
            result = cantor_add(_read_divisor(operands[0], curve, named),
                                _read_divisor(operands[1], curve, named))
    except ValueError as exc:
        raise click.ClickException(str(exc))
    alias = _alias(result, named)
    if as_json:
        text = json.dumps({"u": format_polyy(result.u),
                           "v": format_polyy(result.v),
                           "alias": alias}, indent=2)
    else:
        text = format_divisor(result) + (f" (= {alias})" if alias else "")
    _emit(text, out)


@cli.command(name="xi")
@click.option("--factor", "factors", multiple=True, required=True,
              help="monic factor of the curve polynomial, in the variable s")
@click.argument("divisor")
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", type=click.Path(dir_okay=False))
def xi_cmd(factors, divisor, as_json, out):
    """Descent class tuple of DIVISOR on the curve t^2 = product of the
    factors."""
    try:
        fs = tuple(parse_polyy(f) for f in factors)
        prod = polyy([1])
        for f in fs:
            prod = prod * f
        curve = new_curve(prod)
        ctx = schaefer_context(curve, fs)
        D = identity_divisor(curve) if divisor.strip() == "id" \
            else parse_divisor(divisor, curve)
        t = xi(D, ctx)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    if as_json:
        text = json.dumps([str(c) for c in t.components], indent=2)
    else:
        text = str(t)
    _emit(text, out)


@cli.command()
@click.argument("g1")
@click.argument("g2")
@click.argument("g3")
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", type=click.Path(dir_okay=False))
def richelot(g1, g2, g3, as_json, out):
    """Bracket dual of the quadratic splitting G1 G2 G3 (polynomials in s,
    degrees (1,2,2) in some order): prints Delta and L1, L2, L3; the dual
    curve is Delta zhat^2 = L1 L2 L3."""
    try:
        delta, l1, l2, l3 = richelot_dual(*(parse_polyy(g) for g in (g1, g2, g3)))
    except ValueError as exc:
        raise click.ClickException(str(exc))
    if as_json:
        text = json.dumps({"Delta": format_ratfunc(delta),
                           "L1": format_polyy(l1), "L2": format_polyy(l2),
                           "L3": format_polyy(l3)}, indent=2)
    else:
        text = (f"Delta = {format_ratfunc(delta)}\nL1 = {format_polyy(l1)}\n"
                f"L2 = {format_polyy(l2)}\nL3 = {format_polyy(l3)}")
    _emit(text, out)


@cli.command()
@click.argument("params", nargs=-1, type=RATIONAL)
@click.option("--symbolic", is_flag=True)
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", type=click.Path(dir_okay=False))
def identity(params, symbolic, as_json, out):
    """Verify the sum-of-three-squares product identity, symbolically or at
    rational parameters ALPHA BETA GAMMA (alpha nonzero)."""
    try:
        if symbolic:
            if params:
                raise click.ClickException("--symbolic takes no parameters")
            holds = verify_sos3_identity()
        else:
            if len(params) != 3:
                raise click.ClickException(
                    "give --symbolic or exactly three rationals")
            holds = verify_sos3_identity(*params)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    text = json.dumps({"holds": holds}) if as_json \
        else ("IDENTITY HOLDS" if holds else "IDENTITY FAILS")
    _emit(text, out)
    raise SystemExit(0 if holds else 2)


@cli.command()
@click.argument("function")
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", type=click.Path(dir_okay=False))
def psd(function, as_json, out):
    """Decide whether a rational function of x takes only nonnegative values
    on the real line (equivalently, is a sum of two squares in R(x))."""
    try:
        verdict = is_psd(parse_ratfunc(function))
    except ValueError as exc:
        raise click.ClickException(str(exc))
    text = json.dumps({"psd": verdict}) if as_json \
        else ("PSD" if verdict else "NOT PSD")
    _emit(text, out)


def main():
    try:
        cli.main(standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        sys.exit(1)
    except (click.Abort, EOFError, KeyboardInterrupt):
        sys.exit(1)


if __name__ == "__main__":
    main()
