"""Command-line surface.

Subcommands read isg-1 / isg-gen-1 semigroup files (or grpd-1 groupoid
files), ``-`` meaning standard input, and write byte-deterministic output.
Exit codes: 0 success, 1 failed check suite, 2 malformed input or usage
error, 3 exceeded enumeration bound.
"""

import json
import re
import sys

import click

from . import checks as checks_mod
from . import congruence as cg
from . import fileio
from . import groupoid as gpd
from . import munn as munn_mod
from .core import closure_from_generators, symmetric_inverse_monoid
from .errors import (
    BoundExceeded,
    EmptyAtomSet,
    IsgError,
    MalformedInput,
    NoZero,
    NotAMonoid,
    NotBoolean,
    NotFundamental,
)
from .pbij import parse_element

_PREDICATE_KEYS = (
    "is_group",
    "is_meet_semilattice",
    "is_clifford",
    "has_infinitesimal",
    "is_e_unitary",
    "is_e_star_unitary",
    "is_factorizable",
    "is_f_inverse",
    "is_fundamental",
    "is_0_simple",
    "is_0_disjunctive",
    "is_bisimple",
    "is_0_bisimple",
)


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc}")


def _write_text(text, out):
    if out is None or out == "-":
        click.echo(text, nl=False)
        return
    try:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        raise MalformedInput(f"cannot write {out}: {exc}")


def _load_semigroup(path):
    return fileio.loads_semigroup(_read_text(path))


@click.group()
def cli():
    """Compute with finite inverse semigroups and their groupoids."""


@cli.command()
@click.option("-d", "--degree", type=int, required=True, help="Ground set size.")
@click.option(
    "-g",
    "--generator",
    "generators",
    multiple=True,
    required=True,
    help='Generator, e.g. "1>2", "id:1", "0". Repeatable.',
)
@click.option("-o", "--output", default=None, help="Output file (default stdout).")
def closure(degree, generators, output):
    """Close partial bijections under product and inverse; write isg-1."""
    gens = [parse_element(g, degree) for g in generators]
    semigroup, _ = closure_from_generators(gens)
    _write_text(fileio.dumps_semigroup(semigroup), output)


def _analysis(semigroup):
    report = {}
    report["order"] = len(semigroup)
    report["idempotents"] = len(semigroup.idempotents)
    predicates = semigroup.predicates()
    for key in _PREDICATE_KEYS:
        name = key[3:] if key.startswith("is_") else key
        report[name] = predicates[key]
    greens = semigroup.greens()
    for rel in ("L", "R", "H", "D", "J"):
        report[f"greens_{rel.lower()}"] = len(greens[rel])
    report["sigma_classes"] = len(cg.sigma(semigroup).classes)
    report["mu_classes"] = len(cg.mu(semigroup).classes)
    if semigroup.zero is not None:
        report["xi_classes"] = len(cg.xi(semigroup).classes)
        report["atoms"] = len(gpd.atoms(semigroup))
        report["congruence_free"] = cg.is_congruence_free(semigroup)
    else:
        report["xi_classes"] = None
        report["atoms"] = None
        report["congruence_free"] = None
    try:
        from . import boolean as boolean_mod

        factors = boolean_mod.decompose_fundamental(semigroup)
        report["decomposition"] = " x ".join(f"I{n}" for n in factors)
    except (NotBoolean, NotFundamental, NotAMonoid, NoZero, EmptyAtomSet):
        report["decomposition"] = None
    return report


def _format_value(value):
    if value is None:
        return "not applicable"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


@cli.command()
@click.argument("infile", default="-")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
def analyze(infile, as_json):
    """Print the analysis report for a semigroup file."""
    report = _analysis(_load_semigroup(infile))
    if as_json:
        text = json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"
    else:
        text = "".join(f"{k}: {_format_value(v)}\n" for k, v in report.items())
    click.echo(text, nl=False)


def _label_rank(label):
    if label == "0":
        return 0
    if label.startswith("id:"):
        body = label[3:]
        if re.fullmatch(r"\d+(,\d+)*", body):
            return body.count(",") + 1
    elif re.fullmatch(r"\d+>\d+(,\d+>\d+)*", label):
        return label.count(",") + 1
    raise MalformedInput(f"label {label!r} does not carry a point count")


def _resolve_ideal(semigroup, text):
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if not tokens:
        raise MalformedInput("empty ideal description")
    index_of = {label: i for i, label in enumerate(semigroup.labels)}
    if all(t in index_of for t in tokens):
        ideal = set()
        for t in tokens:
            ideal |= semigroup.principal_ideal(index_of[t])
        return sorted(ideal)
    match = re.fullmatch(r"rank(\d+)", text.strip())
    if match:
        limit = int(match.group(1))
        return sorted(
            s
            for s in range(len(semigroup))
            if _label_rank(semigroup.labels[s]) <= limit
        )
    raise MalformedInput(f"cannot resolve ideal description {text!r}")


@cli.command()
@click.argument("infile", default="-")
@click.option(
    "--by",
    required=True,
    help="sigma | mu | xi | rees=<label,...> | rees=rank<k>",
)
@click.option("-o", "--output", default=None, help="Output file (default stdout).")
def quotient(infile, by, output):
    """Write the quotient by a canonical congruence or a Rees ideal."""
    semigroup = _load_semigroup(infile)
    if by in ("sigma", "mu", "xi"):
        cong = getattr(cg, by)(semigroup)
        target, _ = cg.quotient(semigroup, cong)
    elif by.startswith("rees="):
        ideal = _resolve_ideal(semigroup, by[len("rees="):])
        target, _, _ = cg.rees_quotient(semigroup, ideal)
    else:
        raise MalformedInput(f"unknown quotient kind {by!r}")
    _write_text(fileio.dumps_semigroup(target), output)


@cli.command()
@click.argument("infile", default="-")
@click.option("-o", "--output", default=None, help="Output file (default stdout).")
def munn(infile, output):
    """Write the semigroup of order-isomorphisms between idempotent down-sets."""
    semigroup = _load_semigroup(infile)
    lattice, _ = munn_mod.semilattice_of_idempotents(semigroup)
    target, _ = munn_mod.munn_semigroup(lattice)
    _write_text(fileio.dumps_semigroup(target), output)


@cli.command()
@click.argument("infile", default="-")
@click.option("--atoms", "use_atoms", is_flag=True, help="Atomic groupoid instead.")
@click.option("--dot", "dot_path", default=None, help="Write DOT to this file.")
@click.option("-o", "--output", default=None, help="Output file (default stdout).")
def groupoid(infile, use_atoms, dot_path, output):
    """Write the restricted-product groupoid of a semigroup (grpd-1, DOT via --dot)."""
    semigroup = _load_semigroup(infile)
    if use_atoms:
        built = gpd.atomic_groupoid(semigroup)
    else:
        built = gpd.underlying_groupoid(semigroup)
    if dot_path is not None:
        _write_text(fileio.dumps_dot(built), dot_path)
    _write_text(fileio.dumps_groupoid(built), output)


@cli.command()
@click.argument("infile", default="-")
@click.option("-o", "--output", default=None, help="Output file (default stdout).")
def bisections(infile, output):
    """Write the monoid of local bisections of a grpd-1 groupoid file."""
    built = fileio.loads_groupoid(_read_text(infile))
    semigroup, _ = gpd.local_bisections(built)
    _write_text(fileio.dumps_semigroup(semigroup), output)


@cli.command()
@click.argument("infile", default="-")
@click.option(
    "--suite",
    default="all",
    type=click.Choice(["all", "orders", "congruences", "duality"]),
)
def check(infile, suite):
    """Run invariant suites; exit 0 if everything passes, 1 otherwise."""
    semigroup = _load_semigroup(infile)
    rows = checks_mod.run_suite(semigroup, suite)
    failed = False
    for label, status, detail in rows:
        if status is True:
            click.echo(f"ok   {label}")
        elif status is None:
            click.echo(f"skip {label} ({detail})")
        else:
            failed = True
            click.echo(f"FAIL {label}: {detail}")
    return 1 if failed else 0


@cli.command()
@click.argument("name")
@click.option("-o", "--output", default=None, help="Output file (default stdout).")
def oracle(name, output):
    """Write an enumerated symmetric inverse monoid, e.g. I2."""
    match = re.fullmatch(r"I(\d+)", name)
    if not match:
        raise MalformedInput(f"unknown oracle name {name!r} (expected I<n>)")
    semigroup, _ = symmetric_inverse_monoid(int(match.group(1)))
    _write_text(fileio.dumps_semigroup(semigroup), output)


@cli.command()
@click.argument("infile", default="-")
def congruences(infile):
    """List the whole congruence lattice (bounded) of a semigroup file."""
    semigroup = _load_semigroup(infile)
    lattice = cg.all_congruences(semigroup)
    lines = [f"count: {len(lattice)}"]
    for cong in lattice:
        lines.append(" ".join("{" + ",".join(cls) + "}" for cls in cong.label_classes()))
    click.echo("\n".join(lines) + "\n", nl=False)


def main(argv=None):
    try:
        result = cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Abort:
        return 130
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return 2
    except click.ClickException as exc:
        exc.show()
        return 2
    except BoundExceeded as exc:
        click.echo(f"error: {exc}", err=True)
        return 3
    except IsgError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    sys.exit(main())
