import logging
import sys

from rich.console import Console
from rich.logging import RichHandler

from .constants import LOG_LEVEL_ENV_NAME
from .getenv import getenv

LOG_LEVEL = getenv(LOG_LEVEL_ENV_NAME).as_upper("INFO")

# Create
logger = logging.getLogger(f"Cech Zigzag:{__name__}")
logger.setLevel(LOG_LEVEL)

# stdout is reserved for reports
rich_handler = RichHandler(
    console=Console(file=sys.stderr),
    level=LOG_LEVEL,
    markup=True,
    rich_tracebacks=True,
    tracebacks_show_locals=True,
)

logger.addHandler(rich_handler)
