import click
import uvicorn
from loguru import logger

from core.logs import get_uvicorn_log_config
from core.settings_model import settings


@click.command()
@click.option("--host", default=settings.server.host, show_default=True)
@click.option("--port", type=click.IntRange(1, 65535), default=settings.server.port, show_default=True)
def serve(host: str, port: int) -> None:
    """Serve the evaluation operations over HTTP."""
    logger.info("Starting HTTP API on {}:{}", host, port)
    uvicorn.run(
        "app.app:app",
        log_config=get_uvicorn_log_config(),
        host=host,
        port=port,
        workers=settings.server.workers,
    )
