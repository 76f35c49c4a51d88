import functools
import logging
import time

import click
from pydantic import ValidationError

from src.commands.events import progress
from src.commands.output import error_payload
from src.commands.schemas import RunConfig

logger = logging.getLogger(__name__)


def log_command(func):
    """Log the start, finish and duration of a click command.

    Args:
        func: The command callback to wrap

    Returns:
        The wrapped callback
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context(silent=True)
        name = ctx.command.name if ctx is not None else func.__name__
        # unique run ID
        run_id = str(time.time())

        logger.info(f"Command [{run_id}]: {name} {_options(kwargs)}")

        start_time = time.time()

        try:
            result = func(*args, **kwargs)
            logger.info(f"Finished [{run_id}]: {name} (Processed in {time.time() - start_time:.4f}s)")
            logger.info(f"Progress [{run_id}]: {progress.summary()}")
            return result
        except click.ClickException as e:
            logger.error(
                f"Failed [{run_id}]: {name} exit {e.exit_code} "
                f"(Processed in {time.time() - start_time:.4f}s)"
            )
            raise

    return wrapper


def _options(kwargs) -> str:
    return " ".join(f"{k}={v}" for k, v in kwargs.items() if v is not None and v is not False and v != ())


# subcommand copies of the group options; a value given here wins over the group's
_RUN_OPTIONS = (
    click.option("--format", "output_format", type=click.Choice(["json", "csv", "dot"]), default=None, help="Output format"),
    click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the result here instead of stdout"),
    click.option("--jobs", type=int, default=None, help="Worker processes"),
    click.option("--seed", type=int, default=None, help="Random seed for sampling"),
)


def run_options(func):
    """Accept the run options after the subcommand name too.

    The wrapped callback receives the group's RunConfig with any
    subcommand-level values applied on top.
    """

    @functools.wraps(func)
    def wrapper(config: RunConfig, *args, output_format=None, out=None, jobs=None, seed=None, **kwargs):
        overrides = {
            k: v for k, v in (("format", output_format), ("out", out), ("jobs", jobs), ("seed", seed)) if v is not None
        }
        if overrides:
            try:
                config = RunConfig.model_validate({**config.model_dump(), **overrides})
            except ValidationError as e:
                raise click.UsageError(error_payload(e)["detail"])
        return func(config, *args, **kwargs)

    for option in reversed(_RUN_OPTIONS):
        wrapper = option(wrapper)
    return wrapper
