import logging
import sys

import click
from pydantic import ValidationError

from src.commands.graphs.routes import atlas, enumerate_graphs
from src.commands.oracle.routes import oracle
from src.commands.output import error_payload
from src.commands.schemas import RunConfig
from src.commands.series.routes import amplitude, coeff
from src.commands.volumes.routes import volume
from src.config import settings
from src.events import init_event_listeners

logger = logging.getLogger(__name__)


def configure_logging(level: str):
    """Send logs to stderr so stdout stays machine-readable."""
    logging.basicConfig(
        level=getattr(logging, level),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )


@click.group()
@click.version_option(settings.APP_VERSION, prog_name=settings.APP_NAME)
@click.option("--format", "output_format", type=click.Choice(["json", "csv", "dot"]), default="json", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), help="Write the result here instead of stdout")
@click.option("--jobs", type=int, default=settings.DEFAULT_JOBS, show_default=True, help="Worker processes")
@click.option("--seed", type=int, default=settings.DEFAULT_SEED, show_default=True, help="Random seed for sampling")
@click.option("--log-level", default=settings.LOG_LEVEL, show_default=True, help="Logging level")
@click.pass_context
def cli(ctx: click.Context, output_format: str, out: str, jobs: int, seed: int, log_level: str):
    """Ribbon-graph expansion of the Kontsevich-Penner free energy."""
    try:
        ctx.obj = RunConfig(format=output_format, out=out, jobs=jobs, seed=seed, log_level=log_level)
    except ValidationError as e:
        raise click.UsageError(error_payload(e)["detail"])

    configure_logging(ctx.obj.log_level)
    init_event_listeners()
    logger.debug(f"{settings.APP_NAME} {settings.APP_VERSION} starting with {ctx.obj}")


cli.add_command(enumerate_graphs)
cli.add_command(atlas)
cli.add_command(amplitude)
cli.add_command(coeff)
cli.add_command(oracle)
cli.add_command(volume)


def main():
    try:
        cli(standalone_mode=True)
    except Exception as exc:
        logger.error(f"Unhandled exception: {str(exc)}", exc_info=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
