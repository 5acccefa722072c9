# -*- coding: utf-8 -*-
"""
Command-Line Interface
======================
  - info ALGEBRA               → dims, derived, center, class, GH rank, capability
  - compute QUANTITY ALGEBRA   → one constructive invariant, optionally its basis
  - verify --max-dim N         → catalog sweep against the closed forms
  - export ALGEBRA             → structure-constants file

ALGEBRA is a catalog expression such as "H(1,0)+Hodd(1)" or file:PATH.
Global flags: --seed, --format {text,lines}, --config, --no-parallel, -v.
"""

import ast
import json
import logging
import os

import click

from ..config import config, get_param, set_param
from ..exceptions import AxiomViolation, ClassTooHigh, SuperTensorError
from ..models.graded import GradedDim
from ..models.superalgebra import (
    center,
    check_axioms,
    derived_subalgebra,
    generalized_heisenberg_rank,
    nilpotency_class,
)
from ..services import report_templates
from ..services import exact_linalg as la
from ..services import tensor_homology as th
from ..services.recognizer import recognize_derived_dim_one
from ..services.verification import passed, status_counts, verify_paper
from .algebra_file import dumps, read_algebra, write_algebra
from .expression_parser import parse_expression

_logger = logging.getLogger(__name__)

QUANTITIES = ("tensor2", "ext2", "square", "gamma", "tensor3", "multiplier", "extcenter", "bound")
FILE_PREFIX = "file:"


def _tool_version():
    path = os.path.join(os.path.dirname(os.path.dirname(__file__)), "__manifest__.py")
    try:
        with open(path, "r", encoding="utf-8") as f:
            return ast.literal_eval(f.read()).get("version", "unknown")
    except (OSError, ValueError, SyntaxError) as e:
        _logger.warning(f"Cannot read version from {path}: {e}")
        return "unknown"


TOOL_VERSION = _tool_version()


# =============================================================================
# HELPERS
# =============================================================================


def load_algebra(text):
    """(label, algebra) for a catalog expression or file:PATH; axioms enforced."""
    if text.startswith(FILE_PREFIX):
        L = read_algebra(text[len(FILE_PREFIX):])
        label = text
    else:
        key = parse_expression(text)
        L = key.build()
        label = str(key)
    report = check_axioms(L)
    if not report.ok:
        raise AxiomViolation(report)
    return label, L


def _fail(ctx, error):
    fmt = ctx.obj["format"]
    _logger.error(f"{ctx.info_name} failed: {error}")
    if fmt == "lines":
        click.echo(json.dumps({"success": False, "error": str(error)}, ensure_ascii=False))
    else:
        click.echo(f"Error: {error}", err=True)
        if isinstance(error, AxiomViolation):
            for violation in error.report.violations:
                click.echo(f"  {violation}", err=True)
    ctx.exit(2 if isinstance(error, AxiomViolation) else 1)


def _combination(vector, labels):
    terms = []
    for c, label in zip(vector, labels):
        if c == 0:
            continue
        coeff = "" if c == 1 else ("-" if c == -1 else f"{la.scalar_text(c).removesuffix('/1')}·")
        terms.append(f"{coeff}{label}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


def _emit(ctx, text_output, row, input_echo):
    if ctx.obj["format"] == "lines":
        click.echo(report_templates.render_lines(TOOL_VERSION, input_echo, [row]), nl=False)
    else:
        click.echo(text_output, nl=False)


# =============================================================================
# COMMANDS
# =============================================================================


@click.group()
@click.version_option(version=TOOL_VERSION, prog_name="supertensor")
@click.option("--seed", type=int, default=None, help="Default seed for F2 expressions and the verify sweep.")
@click.option("--format", "fmt", type=click.Choice(["text", "lines"]), default="text", show_default=True)
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
              help="YAML file with supertensor.* settings.")
@click.option("--no-parallel", is_flag=True, help="Run the verify sweep in a single process.")
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG.")
@click.pass_context
def main(ctx, seed, fmt, config_path, no_parallel, verbose):
    """Tensor and exterior squares of nilpotent Lie superalgebras."""
    config.reset()
    if config_path:
        config.load_file(config_path)
    if seed is not None:
        set_param("supertensor.seed", seed)
    if no_parallel:
        set_param("supertensor.no_parallel", True)
    level = {0: str(get_param("supertensor.log_level")).upper(), 1: "INFO"}.get(verbose, "DEBUG")
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    ctx.obj = {"format": fmt}


@main.command()
@click.argument("algebra")
@click.pass_context
def info(ctx, algebra):
    """Structural summary of ALGEBRA."""
    try:
        label, L = load_algebra(algebra)
        derived = derived_subalgebra(L).dim
        z = center(L).dim
        cls = nilpotency_class(L)
        capable = th.is_capable(L) if cls is not None and cls <= 2 else None
        normal_form = None
        if cls is not None and derived.total == 1:
            shape = recognize_derived_dim_one(L)
            normal_form = f"{shape.heisenberg_label} + A{shape.abelian}"
        gh = generalized_heisenberg_rank(L)
        data = {
            "algebra": label,
            "dim": L.dim,
            "derived": derived,
            "center": z,
            "center_whole": z == L.dim,
            "nilpotency_class": cls,
            "gh_rank": gh,
            "capable": capable,
            "normal_form": normal_form,
        }
    except SuperTensorError as e:
        _fail(ctx, e)
        return
    row = {k: (str(v) if isinstance(v, GradedDim) else v) for k, v in data.items()}
    _emit(ctx, report_templates.render_info(data), row, algebra)


def _compute(quantity, L):
    """(dim, basis labels or None, bound dict or None)."""
    if quantity == "tensor2":
        tensor = th.tensor_square(L)
        return tensor.quotient_dim, list(tensor.representative_labels()), None
    if quantity == "ext2":
        exterior = th.exterior_square(L)
        return exterior.quotient_dim, list(exterior.representative_labels()), None
    if quantity == "square":
        tensor = th.tensor_square(L)
        labels = tensor.representative_labels()
        square = th.square_submodule(L, tensor)
        return (square.graded_dim(tensor.quotient_parities),
                [_combination(v, labels) for v in square.basis], None)
    if quantity == "gamma":
        ab = th.abelianization_dim(L)
        presentation = th.gamma_space(ab.even, ab.odd).presentation
        return presentation.quotient_dim, list(presentation.representative_labels()), None
    if quantity == "tensor3":
        return th.triple_tensor_class2(L), None, None
    if quantity == "multiplier":
        return th.schur_multiplier_class2(L), None, None
    if quantity == "extcenter":
        zw = th.exterior_center(L)
        return zw.dim, [_combination(v, L.names) for v in zw.space.basis], None
    tensor = th.tensor_square(L)
    report = th.bound_check(L, tensor)
    bound = {"lhs": report.lhs, "rhs": report.rhs, "equality": report.equality}
    return th.triple_tensor_class2(L, tensor), None, bound


@main.command()
@click.argument("quantity", type=click.Choice(QUANTITIES))
@click.argument("algebra")
@click.option("--basis", "show_basis", is_flag=True, help="Also list coset representatives.")
@click.pass_context
def compute(ctx, quantity, algebra, show_basis):
    """Constructive QUANTITY of ALGEBRA (nilpotency class ≤ 2)."""
    try:
        label, L = load_algebra(algebra)
        dim, basis, bound = _compute(quantity, L)
    except ClassTooHigh as e:
        _fail(ctx, ClassTooHigh(f"compute {quantity} requires nilpotency class ≤ 2: {e}"))
        return
    except SuperTensorError as e:
        _fail(ctx, e)
        return
    cap = int(get_param("supertensor.basis_cap"))
    total = len(basis) if basis is not None else 0
    shown = basis[:cap] if show_basis and basis is not None else None
    truncated = shown is not None and total > cap
    result = {
        "algebra": label,
        "quantity": quantity,
        "dim": dim,
        "bound": bound,
        "basis": shown,
        "truncated": truncated,
        "total": total,
    }
    row = {"algebra": label, "quantity": quantity, "dim": str(dim)}
    if bound:
        row["bound"] = bound
    if shown is not None:
        row.update(basis=shown, truncated=truncated)
    _emit(ctx, report_templates.render_quantity(result), row, algebra)


@main.command()
@click.option("--max-dim", "max_dim", type=click.IntRange(min=2), required=True,
              help="Largest total dimension of the swept specimens.")
@click.option("-o", "--output", "output", type=click.Path(dir_okay=False), default=None,
              help="Write the report here instead of standard output.")
@click.pass_context
def verify(ctx, max_dim, output):
    """Sweep catalog specimens; exit 0 iff there are no mismatch records."""
    seed = int(get_param("supertensor.seed"))
    input_echo = f"verify --max-dim {max_dim} --seed {seed}"
    try:
        records = verify_paper(max_dim, seed)
    except SuperTensorError as e:
        _fail(ctx, e)
        return
    counts = status_counts(records)
    ok = passed(records)
    if ctx.obj["format"] == "lines":
        text = report_templates.render_lines(TOOL_VERSION, input_echo, [r.to_dict() for r in records])
    else:
        text = report_templates.render_report(TOOL_VERSION, input_echo, records, counts, ok)
    if output:
        try:
            with open(output, "w", encoding="utf-8") as f:
                f.write(text)
        except OSError as e:
            _logger.error(f"Cannot write report {output}: {e}")
            click.echo(f"Error: cannot write {output}: {e}", err=True)
            ctx.exit(1)
        click.echo(f"{len(records)} records written to {output}; mismatches: {counts.get('mismatch', 0)}")
    else:
        click.echo(text, nl=False)
    ctx.exit(0 if ok else 1)


@main.command()
@click.argument("algebra")
@click.option("-o", "--output", "output", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def export(ctx, algebra, output):
    """Structure-constants file for ALGEBRA."""
    try:
        _, L = load_algebra(algebra)
        if output:
            write_algebra(L, output)
        else:
            click.echo(dumps(L), nl=False)
    except SuperTensorError as e:
        _fail(ctx, e)
    except OSError as e:
        _logger.error(f"Cannot write algebra file {output}: {e}")
        click.echo(f"Error: cannot write {output}: {e}", err=True)
        ctx.exit(1)
