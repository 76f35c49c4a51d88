import logging

import click

from src.commands.oracle.schemas import OracleRequest
from src.commands.oracle.service import OracleService
from src.commands.output import build_request, fail, reject_dot, to_csv, write_output
from src.commands.schemas import RunConfig
from src.middleware import log_command, run_options

logger = logging.getLogger(__name__)


@click.command("oracle")
@click.option("--max-half-edges", type=int, required=True, help="Largest |h| summed over")
@click.option("--colors", type=int, required=True, help="Number of colors N")
@click.option("--compare", is_flag=True, help="Compare with the exp-assembled graph sum")
@click.option("--audit", is_flag=True, help="Also run the orbit-stabilizer audit")
@click.pass_obj
@run_options
@log_command
def oracle(config: RunConfig, max_half_edges: int, colors: int, compare: bool, audit: bool):
    """tau coefficients from Wick pairings; exit 1 when the comparison disagrees."""
    reject_dot(config.format)
    request = build_request(
        OracleRequest, max_half_edges=max_half_edges, colors=colors, compare=compare, audit=audit
    )

    report, errors = OracleService.run(request, jobs=config.jobs)

    if report is not None:
        if config.format == "csv":
            graph = {r.monomial: r.coefficient for r in report.graph or []}
            text = to_csv(
                ("monomial", "oracle", "graph"),
                ((r.monomial, r.coefficient, graph.get(r.monomial, "")) for r in report.oracle),
            )
        else:
            text = report.model_dump_json(indent=2, exclude_none=True)
        write_output(text, config.out)

    if errors:
        fail(errors)
