"""Command-line front end: realization, inertia construction, verification,
factoring, and pattern lookup as subcommands with JSON input and output.

Exit codes: 0 success, 1 verification or root-finding failure, 2 usage or
precondition error.
"""

from __future__ import annotations

import json
import sys

import click

from .patterns import BUILTIN_NAMES, builtin_pattern
from .poly import polynomial_from_dict
from .realize import realize_inertia, realize_poly, select_triple
from .roots import RootFindingError, find_roots, refined_inertia_of, roots_to_quadratics
from .verify import SuiteConfig, check_divisor_obstruction, check_identity, run_theorem_suite


def _emit(data: dict, out: str | None) -> None:
    text = json.dumps(data, indent=2)
    if out is None:
        click.echo(text)
    else:
        with open(out, "w") as fh:
            fh.write(text + "\n")


def _load_poly(fh):
    try:
        return polynomial_from_dict(json.load(fh))
    except (json.JSONDecodeError, ValueError, KeyError, TypeError) as e:
        raise click.UsageError(f"invalid polynomial input: {e}")


def _check_tol(tol: float) -> None:
    if tol <= 0:
        raise click.UsageError("tolerance must be positive")


@click.group()
def main():
    """Constructive spectra for sign patterns.

    Polynomials are JSON objects {"coeffs": [c0, c1, ...]} in ascending
    order; string coefficients like "-2/7" select exact rational arithmetic.
    Matrices print as {"n": ..., "entries": [[...], ...]}.
    """


@main.command()
@click.argument("poly", type=click.File("r"))
@click.option("--t", "t", type=int, required=True, help="Number of 6x6 template blocks.")
@click.option("--d", "d", type=int, required=True, help="Number of 2x2 blocks (at least 5).")
@click.option("--tol", type=float, default=1e-9, show_default=True, help="Root-finding tolerance.")
@click.option(
    "--backend",
    type=click.Choice(["rational", "float"]),
    default="float",
    show_default=True,
    help="Arithmetic for the constructed blocks.",
)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None, help="Write JSON here instead of stdout.")
def realize(poly, t, d, tol, backend, out):
    """Realize a monic degree-(6T + 2D) polynomial over the composite pattern.

    POLY is a polynomial JSON file, or - for stdin.
    """
    _check_tol(tol)
    f = _load_poly(poly)
    try:
        rep = realize_poly(f, t, d, tol=tol, backend=backend)
    except ValueError as e:
        raise click.UsageError(str(e))
    except RootFindingError as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(1)
    _emit(rep.to_dict(), out)


@main.command()
@click.argument("n_plus", type=int)
@click.argument("n_minus", type=int)
@click.argument("n_zero", type=int)
@click.argument("n_imag", type=int)
@click.option("--tol", type=float, default=1e-9, show_default=True, help="Classification tolerance for the echo check.")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
def inertia(n_plus, n_minus, n_zero, n_imag, tol, out):
    """Build an 8x8 matrix over diag(T, D) with the requested refined inertia.

    The four arguments count eigenvalues with positive real part, negative
    real part, zero, and purely imaginary conjugate pairs; they must satisfy
    N_PLUS + N_MINUS + N_ZERO + 2*N_IMAG = 8.
    """
    _check_tol(tol)
    nu = (n_plus, n_minus, n_zero, n_imag)
    total = n_plus + n_minus + n_zero + 2 * n_imag
    if any(x < 0 for x in nu):
        raise click.UsageError("inertia components must be nonnegative")
    if total != 8:
        raise click.UsageError(f"n_plus + n_minus + n_zero + 2*n_imag must equal 8, got {total}")
    matrix = realize_inertia(nu)
    classified = refined_inertia_of(matrix, tol=tol)
    _emit(
        {
            "matrix": matrix.to_dict(),
            "requested": list(nu),
            "classified": list(classified),
        },
        out,
    )


@main.command()
@click.argument("which", type=click.Choice(["identities", "divisors", "theorem", "all"]))
@click.option("--samples", type=int, default=1000, show_default=True, help="Samples per identity check.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--tol", type=float, default=1e-9, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
def verify(which, samples, seed, tol, out):
    """Run exact certificates: coefficient identities, the divisor
    obstruction, or the full three-part suite.

    Exits 1 when any requested check fails.
    """
    _check_tol(tol)
    if samples < 1:
        raise click.UsageError("samples must be at least 1")
    result = {}
    ok = True
    if which in ("identities", "all"):
        rt = check_identity("T", samples, seed)
        rtp = check_identity("Tprime", samples, seed)
        result["identities"] = {"T": rt.to_dict(), "Tprime": rtp.to_dict()}
        ok = ok and rt.all_passed and rtp.all_passed
    if which in ("divisors", "all"):
        obstruction = check_divisor_obstruction()
        result["divisors"] = obstruction.to_dict()
        ok = ok and obstruction.passed
    if which in ("theorem", "all"):
        suite = run_theorem_suite(SuiteConfig(seed=seed, tol=tol, identity_samples=samples))
        result["theorem"] = suite.to_dict()
        ok = ok and suite.passed
    _emit(result, out)
    if not ok:
        sys.exit(1)


@main.command()
@click.argument("poly", type=click.File("r"))
@click.option("--tol", type=float, default=1e-9, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
def factor(poly, tol, out):
    """Split an even-degree monic polynomial into monic quadratics.

    When the degree is at least 16, also report the sign-homogeneous triple
    the realization engine would route to a 6x6 block.
    """
    _check_tol(tol)
    f = _load_poly(poly)
    if f.degree < 2 or f.degree % 2:
        raise click.UsageError(f"degree must be even and at least 2, got {f.degree}")
    try:
        quads = roots_to_quadratics(find_roots(f, tol=tol))
    except (RootFindingError, ValueError) as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(1)
    data = {"quadratics": [{"a": float(q.a), "b": float(q.b)} for q in quads]}
    if f.degree >= 16:
        eps_zero = tol * (1.0 + max(max(abs(q.a), abs(q.b)) for q in quads))
        sel = select_triple(quads, eps_zero)
        data["triple"] = {
            "label": sel.label,
            "quadratics": [{"a": float(q.a), "b": float(q.b)} for q in sel.triple],
            "snapped": sel.snapped,
        }
    _emit(data, out)


@main.command()
@click.argument("name")
@click.option("--t", "t", type=int, default=None, help="Template block count (pattern V only).")
@click.option("--d", "d", type=int, default=None, help="2x2 block count (pattern V only).")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
def pattern(name, t, d, out):
    """Print a built-in sign pattern as JSON.

    Known names: T, Tprime, D, X_template, S, Sprime, TD, U1, U2, U3, and V
    (which needs --t and --d).
    """
    try:
        p = builtin_pattern(name, t=t, d=d)
    except ValueError as e:
        raise click.UsageError(f"{e}; known names: {', '.join(BUILTIN_NAMES)}")
    _emit(p.to_dict(), out)
