import logging

import click

from src.commands.output import build_request, fail, reject_dot, to_csv, write_output
from src.commands.schemas import RunConfig
from src.commands.series.schemas import AmplitudeRequest, CoeffRequest
from src.commands.series.service import SeriesService
from src.config import settings
from src.middleware import log_command, run_options

logger = logging.getLogger(__name__)


@click.command("amplitude")
@click.option("--genus", type=int, required=True, help="Genus g")
@click.option("--boundaries", type=int, default=0, show_default=True, help="Boundary components b")
@click.option("--faces", type=int, required=True, help="Faces n")
@click.pass_obj
@run_options
@log_command
def amplitude(config: RunConfig, genus: int, boundaries: int, faces: int):
    """Reduced Laurent table W of one type."""
    reject_dot(config.format)
    request = build_request(AmplitudeRequest, genus=genus, boundaries=boundaries, faces=faces)

    table, errors = SeriesService.amplitude(request, jobs=config.jobs)

    if errors:
        fail(errors)

    if config.format == "csv":
        text = to_csv(("monomial", "coefficient"), ((t.monomial, t.coefficient) for t in table.monomials))
    else:
        text = table.model_dump_json(indent=2)
    write_output(text, config.out)


@click.command("coeff")
@click.option("--max-edges", type=int, required=True, help="Include every stable type with E <= this")
@click.option("--tau", is_flag=True, help="Report tau = exp(F) instead of F")
@click.option(
    "--hbar/--no-hbar",
    default=settings.HBAR_GRADING,
    show_default=True,
    help="Grade each contribution by hbar^(2g+b-2); --no-hbar prints plain coefficients such as 2 Q for t1 t2",
)
@click.pass_obj
@run_options
@log_command
def coeff(config: RunConfig, max_edges: int, tau: bool, hbar: bool):
    """Coefficients of the free energy in the times t_k.

    The hbar grading is on by default, so [t1 t2] reads "2 Q hbar^-1";
    pass --no-hbar for "2 Q".
    """
    reject_dot(config.format)
    request = build_request(CoeffRequest, max_edges=max_edges, tau=tau, hbar=hbar)

    table, errors = SeriesService.coefficients(request, jobs=config.jobs)

    if errors:
        fail(errors)

    if config.format == "csv":
        text = to_csv(("monomial", "coefficient"), ((r.monomial, r.coefficient) for r in table.rows))
    else:
        text = table.model_dump_json(indent=2)
    write_output(text, config.out)
