import logging
from typing import Optional, Tuple

import click

from src.commands.output import build_request, fail, reject_dot, to_csv, write_output
from src.commands.schemas import RunConfig
from src.commands.volumes.schemas import VolumeRequest
from src.commands.volumes.service import VolumeService
from src.middleware import log_command, run_options

logger = logging.getLogger(__name__)


@click.command("volume")
@click.option("--genus", type=int, required=True, help="Genus g")
@click.option("--boundaries", type=int, default=0, show_default=True, help="Boundary components b")
@click.option("--faces", type=int, required=True, help="Faces n")
@click.option("--x", "x", multiple=True, help="Face perimeter, p/q (repeat per face)")
@click.option("--y", "y", multiple=True, help="Boundary perimeter, p/q (repeat per boundary)")
@click.option("--laplace", is_flag=True, help="Monte Carlo check of the Laplace transform against W")
@click.option("--exact", is_flag=True, help="Symbolic Laplace identity of the y-integrated volume")
@click.option("--lambda", "lambdas", multiple=True, help="Laplace variable, p/q (repeat per face)")
@click.option("--samples", type=int, help="Monte Carlo samples")
@click.option("--tolerance", type=float, help="Accepted relative error")
@click.pass_obj
@run_options
@log_command
def volume(
    config: RunConfig,
    genus: int,
    boundaries: int,
    faces: int,
    x: Tuple[str, ...],
    y: Tuple[str, ...],
    laplace: bool,
    exact: bool,
    lambdas: Tuple[str, ...],
    samples: Optional[int],
    tolerance: Optional[float],
):
    """Combinatorial volume of a type, or its Laplace consistency checks."""
    reject_dot(config.format)
    request = build_request(
        VolumeRequest,
        genus=genus,
        boundaries=boundaries,
        faces=faces,
        x=list(x),
        y=list(y),
        laplace=laplace,
        exact=exact,
        lambdas=list(lambdas),
        samples=samples,
        tolerance=tolerance,
    )

    result, errors = VolumeService.run(request, jobs=config.jobs, seed=config.seed)

    if result is not None:
        if config.format == "csv":
            fields = result.model_dump(mode="json")
            text = to_csv(tuple(fields), [tuple(" ".join(v) if isinstance(v, list) else v for v in fields.values())])
        else:
            text = result.model_dump_json(indent=2)
        write_output(text, config.out)

    if errors:
        fail(errors)
