"""Command-line front end.

Inputs are either standard parameters such as ``C(+,-2)`` or a complex in
the JSON schema of :mod:`iotacurves.iota`, given inline or with ``--file``.
Exit codes: 0 on success, 1 when the input is well formed but invalid (or a
verification property fails), 2 on syntax errors.
"""

from __future__ import annotations

import json
import os
import sys

import click

from . import invariants as inv
from .coeff import CoefficientError
from .iota import (AlmostIotaComplex, ParamsSyntaxError, StandardParams, build_standard,
                   complex_from_json, complex_to_json, parse_params, product, validate)
from .precurve import NotPrimitive
from .render import RenderOptions, render_svg
from .verify import verify_suite

SYNTAX, INVALID = 2, 1


def parse_complex(text: str) -> AlmostIotaComplex | StandardParams:
    body = text.strip()
    if body.startswith("C("):
        return parse_params(text)
    if body.startswith("{"):
        c = complex_from_json(body)
        validate(c).raise_if_invalid()
        return c
    raise ParamsSyntaxError("expected 'C(' or a JSON object", len(text) - len(text.lstrip()))


def as_complex(x: AlmostIotaComplex | StandardParams) -> AlmostIotaComplex:
    return build_standard(x) if isinstance(x, StandardParams) else x


def _style(text: str, **kw) -> str:
    return text if os.environ.get("NO_COLOR") else click.style(text, **kw)


def _inputs(inline: tuple[str, ...], files: tuple[str, ...], count: int):
    texts = list(inline)
    for path in files:
        with open(path, encoding="utf-8") as fh:
            texts.append(fh.read())
    if len(texts) != count:
        raise click.UsageError(f"expected {count} input(s), got {len(texts)}")
    return [parse_complex(t) for t in texts]


def _emit_params(p: StandardParams, fmt: str):
    if fmt == "json":
        click.echo(json.dumps(complex_to_json(build_standard(p)), indent=2))
    else:
        click.echo(str(p))


class _Group(click.Group):
    """Maps library errors onto the documented exit codes."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (ParamsSyntaxError, CoefficientError, json.JSONDecodeError) as exc:
            click.echo(_style("syntax error: ", fg="red") + str(exc), err=True)
            ctx.exit(SYNTAX)
        except (ValueError, NotPrimitive) as exc:
            click.echo(_style("invalid input: ", fg="red") + str(exc), err=True)
            ctx.exit(INVALID)
        except OSError as exc:
            click.echo(_style("error: ", fg="red") + str(exc), err=True)
            ctx.exit(INVALID)


file_opt = click.option("--file", "files", multiple=True, type=click.Path(dir_okay=False),
                        help="Read an input from a file instead of the command line.")
format_opt = click.option("--format", "fmt", type=click.Choice(["params", "json"]),
                          default="params", show_default=True)


@click.group(cls=_Group)
def main():
    """Classify almost iota-complexes up to local equivalence."""


@main.command()
@click.argument("inputs", nargs=-1)
@file_opt
@format_opt
def classify(inputs, files, fmt):
    """Print the standard complex locally equivalent to INPUT."""
    (x,) = _inputs(inputs, files, 1)
    _emit_params(inv.classify(as_complex(x)), fmt)


@main.command()
@click.argument("inputs", nargs=-1)
@file_opt
@format_opt
def invariants(inputs, files, fmt):
    """Print P, P_omega and the nonzero phi_n of INPUT."""
    (x,) = _inputs(inputs, files, 1)
    rec = inv.InvariantRecord.of(inv.classify(as_complex(x)))
    if fmt == "json":
        click.echo(json.dumps(rec.to_json(), indent=2))
        return
    click.echo(_style("class", bold=True) + f"   {rec.params}")
    click.echo(_style("P", bold=True) + f"       {rec.P}")
    click.echo(_style("P_omega", bold=True) + f" {rec.Pomega}")
    for n, v in rec.phi.items():
        click.echo(_style(f"phi_{n}", bold=True) + " " * max(1, 8 - len(f"phi_{n}")) + str(v))


@main.command("product")
@click.argument("inputs", nargs=-1)
@file_opt
@format_opt
@click.option("--classify", "do_classify", is_flag=True,
              help="Reduce the product to its standard complex.")
def product_cmd(inputs, files, fmt, do_classify):
    """Tensor product of A and B."""
    a, b = _inputs(inputs, files, 2)
    c = product(as_complex(a), as_complex(b))
    if do_classify:
        _emit_params(inv.classify(c), fmt)
    else:
        # An unreduced product has no parameter form.
        click.echo(json.dumps(complex_to_json(c), indent=2))


@main.command()
@click.argument("inputs", nargs=-1)
@click.option("-n", "index", type=click.IntRange(min=1), required=True,
              help="Lengthen every U-arc of length at least N.")
@file_opt
@format_opt
def shift(inputs, index, files, fmt):
    """Apply the shift endomorphism to INPUT."""
    (x,) = _inputs(inputs, files, 1)
    _emit_params(inv.shift_class(as_complex(x), index), fmt)


@main.command()
@click.argument("inputs", nargs=-1)
@file_opt
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option("--no-names", is_flag=True, help="Omit generator labels.")
def render(inputs, files, out, no_names):
    """Draw the multicurve of INPUT as SVG."""
    (x,) = _inputs(inputs, files, 1)
    svg = render_svg(inv.multicurve_of(as_complex(x)), RenderOptions(show_names=not no_names))
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(svg)


@main.command()
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--trials", type=click.IntRange(min=1), default=100, show_default=True)
def verify(seed, trials):
    """Run the seeded property suite and print the report as JSON."""
    report = verify_suite(seed, trials)
    click.echo(report.dumps())
    status = _style("ok", fg="green") if report.ok else _style("FAILED", fg="red")
    click.echo(f"verify: {status}", err=True)
    if not report.ok:
        sys.exit(INVALID)


if __name__ == "__main__":
    main()
