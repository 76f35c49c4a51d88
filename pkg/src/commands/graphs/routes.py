import logging
from typing import Optional

import click

from src.commands.graphs.schemas import AtlasRequest, EnumerateRequest
from src.commands.graphs.service import GraphService
from src.commands.output import build_request, fail, reject_dot, to_json, write_output
from src.commands.schemas import RunConfig
from src.middleware import log_command, run_options
from src.ribbon.interchange import records_to_json

logger = logging.getLogger(__name__)


@click.command("enumerate")
@click.option("--genus", type=int, help="Genus g of the type")
@click.option("--boundaries", type=int, help="Boundary components b of the type")
@click.option("--faces", type=int, help="Faces n of the type")
@click.option("--profile", help="Vertex profile d,b1,b2,...")
@click.option("--verify", is_flag=True, help="Re-read every emitted record and compare canonical codes")
@click.pass_obj
@run_options
@log_command
def enumerate_graphs(
    config: RunConfig,
    genus: Optional[int],
    boundaries: Optional[int],
    faces: Optional[int],
    profile: Optional[str],
    verify: bool,
):
    """List every face-marked class of a type or a vertex profile."""
    request = build_request(
        EnumerateRequest,
        genus=genus,
        boundaries=boundaries,
        faces=faces,
        profile=profile,
        verify=verify,
    )

    classes, errors = GraphService.enumerate_classes(request, jobs=config.jobs)

    if errors:
        fail(errors)

    if config.format == "csv":
        text = GraphService.render_csv(classes)
    elif config.format == "dot":
        text = GraphService.render_dot(classes)
    else:
        text = records_to_json(GraphService.records(classes))
    write_output(text, config.out)


@click.command("atlas")
@click.option("--genus", type=int, required=True, help="Genus g")
@click.option("--boundaries", type=int, default=0, show_default=True, help="Boundary components b")
@click.option("--faces", type=int, required=True, help="Faces n")
@click.option("--dir", "directory", type=click.Path(file_okay=False), required=True, help="Output directory")
@click.pass_obj
@run_options
@log_command
def atlas(config: RunConfig, genus: int, boundaries: int, faces: int, directory: str):
    """Write one Graphviz file per class of a type and list them."""
    reject_dot(config.format)
    request = build_request(AtlasRequest, genus=genus, boundaries=boundaries, faces=faces, directory=directory)

    entries, errors = GraphService.write_atlas(request, jobs=config.jobs)

    if errors:
        fail(errors)

    write_output(to_json([e.model_dump() for e in entries]), config.out)
