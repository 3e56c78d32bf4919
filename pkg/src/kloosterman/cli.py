"""Command-line interface.

    kloosterman setup -p 2 -n 75 -o f2_75.ctx
    kloosterman test --ctx f2_75.ctx -a 1f...
    kloosterman search -p 2 -n 16 --seed 7
    kloosterman table -p 2 --n-max 13 --format csv
    kloosterman bench -p 2 -n 32 --samples 1000

``test`` exits 0 for a zero, 1 for a non-zero and 2 on any error.  ``search``
exits 0 when it finds a zero and 1 when it runs out of trials.  In ``bench``
output, wall-clock figures are on lines starting with ``timing``.
"""

import sys

import click

from . import context
from .errors import Exhausted, KloostermanError
from .search import curve_for, run_bench, search_zero
from .stats import check_cap, divisibility_table, to_csv, to_json


def _field(ctx_path, p, n):
    if ctx_path:
        return context.load(ctx_path)
    if p is None or n is None:
        raise click.UsageError("give either --ctx or both -p and -n")
    return context.setup(p, n)


def _fmt_point(field, P):
    if P is None:
        return "O"
    return f"x={field.to_str(P[0])} y={field.to_str(P[1])}"


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


ctx_option = click.option("--ctx", "ctx_path", type=click.Path(exists=True, dir_okay=False),
                          help="Context file written by `setup`.")
p_option = click.option("-p", type=click.IntRange(2, 3), help="Characteristic, 2 or 3.")
n_option = click.option("-n", type=click.IntRange(min=1), help="Extension degree.")


@click.group()
def main():
    """Kloosterman zero testing via Sylow subgroups of the associated curves."""


@main.command()
@click.option("-p", type=click.IntRange(2, 3), required=True)
@click.option("-n", type=click.IntRange(min=1), required=True)
@click.option("-o", "out", type=click.Path(dir_okay=False), help="Output file (default stdout).")
def setup(p, n, out):
    """Write the field context (modulus, delta, solver table)."""
    _emit(context.dumps(context.setup(p, n)), out)


@main.command()
@ctx_option
@p_option
@n_option
@click.option("-a", "element", required=True, help="Element: hex for p=2, trit string for p=3.")
def test(ctx_path, p, n, element):
    """Decide whether a single element is a Kloosterman zero."""
    try:
        field = _field(ctx_path, p, n)
        a = field.from_str(element)
        curve = curve_for(field, a)
        res = curve.sylow()
        zero = curve.is_zero()
    except (KloostermanError, ValueError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    verdict = "ZERO" if zero else "NONZERO"
    if field.p == 3 and field.n == 1:
        verdict += " (naive fallback)"
    click.echo(f"{verdict} h={res.h}")
    click.echo(f"generator {_fmt_point(field, res.generator)}")
    sys.exit(0 if zero else 1)


@main.command()
@ctx_option
@p_option
@n_option
@click.option("--seed", type=click.IntRange(0, 2 ** 64 - 1), default=0, show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--max-trials", type=click.IntRange(min=1), default=10 ** 6, show_default=True)
def search(ctx_path, p, n, seed, workers, max_trials):
    """Test random elements until a zero is found."""
    field = _field(ctx_path, p, n)
    try:
        hit = search_zero(field, seed=seed, workers=workers, max_trials=max_trials)
    except Exhausted as exc:
        click.echo(f"EXHAUSTED after {exc.trials} trials")
        sys.exit(1)
    except KloostermanError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    click.echo(f"FOUND a={field.to_str(hit.a)} trial={hit.trial}")
    click.echo(f"h={hit.h} generator {_fmt_point(field, hit.generator)}")
    click.echo(f"verified={'yes' if hit.verified else 'NO'}")
    sys.exit(0 if hit.verified else 2)


@main.command()
@click.option("-p", type=click.IntRange(2, 3), required=True)
@click.option("--n-max", type=click.IntRange(min=1), required=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("-o", "out", type=click.Path(dir_okay=False))
def table(p, n_max, fmt, workers, out):
    """Exhaustive divisibility counts for n = 1 .. n-max."""
    try:
        check_cap(p, n_max)
        rows = [divisibility_table(p, n, workers) for n in range(1, n_max + 1)]
    except KloostermanError as exc:
        raise click.ClickException(str(exc))
    _emit(to_csv(rows) if fmt == "csv" else to_json(rows), out)


@main.command()
@ctx_option
@p_option
@n_option
@click.option("--samples", type=click.IntRange(min=1), default=1000, show_default=True)
@click.option("--seed", type=click.IntRange(0, 2 ** 64 - 1), default=0, show_default=True)
def bench(ctx_path, p, n, samples, seed):
    """Time the Sylow test against the random-point multiplication test."""
    field = _field(ctx_path, p, n)
    r = run_bench(field, samples, seed)
    click.echo(f"p={r['p']} n={r['n']} samples={r['samples']} seed={seed}")
    click.echo(f"zeros={r['zeros']}")
    click.echo(f"mean_h={r['mean_h']:.6f}")
    click.echo(f"mean_iterations={r['mean_iterations']:.6f}")
    click.echo(f"timing sylow_mean_s={r['sylow_mean_s']:.3e}")
    click.echo(f"timing lisonek_mean_s={r['lisonek_mean_s']:.3e}")
    click.echo(f"timing lisonek_precheck_mean_s={r['lisonek_precheck_mean_s']:.3e}")
    click.echo(f"timing speedup_vs_lisonek={r['lisonek_mean_s'] / r['sylow_mean_s']:.2f}")
    click.echo(f"timing speedup_vs_precheck={r['lisonek_precheck_mean_s'] / r['sylow_mean_s']:.2f}")


if __name__ == "__main__":
    main()
