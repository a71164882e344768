"""
Entry point for the lie2weyl command-line tool.
"""
import sys

from loguru import logger

from lie2weyl.cli import run
from lie2weyl.utils.config import config


def configure_logging(level: str = config.runtime.log_level) -> None:
    """Route loguru to stderr at the given level, keeping stdout for reports."""
    logger.remove()
    logger.add(sys.stderr, level=level.upper(), format="{time:HH:mm:ss} | {level: <8} | {name}:{line} - {message}")


def main() -> None:
    configure_logging("DEBUG" if config.debug else config.runtime.log_level)
    logger.debug(f"Using configuration: {config.as_dict()}")
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
