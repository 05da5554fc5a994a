from typing import Any

import click
from loguru import logger
from pydantic import ValidationError

from core import __version__
from core.errors import EvaluationError
from core.logs import configure_logger

__all__ = ["__version__", "cli", "main"]

EXIT_IO_ERROR = 1
EXIT_INVALID = 2


class EvaluationGroup(click.Group):
    """Maps domain failures onto the exit code contract: 2 invalid input, 1 I/O failure."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except (EvaluationError, ValidationError) as e:
            logger.debug("Rejected input: {!r}", e)
            click.echo(f"Error: {e}", err=True)
            ctx.exit(EXIT_INVALID)
        except OSError as e:
            logger.debug("I/O failure: {!r}", e)
            click.echo(f"Error: {e}", err=True)
            ctx.exit(EXIT_IO_ERROR)


@click.group(cls=EvaluationGroup)
@click.version_option(__version__, prog_name="wba")
@click.option("-v", "--verbose", is_flag=True, help="Log computation details to stderr.")
def cli(verbose: bool) -> None:
    """Class-weighted evaluation of multi-class classifiers."""
    configure_logger("DEBUG" if verbose else None)


def main() -> None:
    cli()


from cli.commands import compare, evaluate, profile, serve, weights  # noqa: E402

cli.add_command(evaluate.evaluate)
cli.add_command(compare.compare)
cli.add_command(weights.weights)
cli.add_command(profile.profile)
cli.add_command(serve.serve)
