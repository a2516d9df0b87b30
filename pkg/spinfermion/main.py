"""
spinfermion - Entry Point

Command-line access to the exact spin/fermion mapping.
"""

import sys

from spinfermion import __app_name__, __version__
from spinfermion.cli.commands import run
from spinfermion.core.logger import get_logger


def main():
    """Main application entry point."""
    logger = get_logger()
    logger.debug(f"Starting {__app_name__} v{__version__}")

    exit_code = run(sys.argv[1:])

    logger.debug(f"Exiting with code {exit_code}")
    sys.exit(exit_code)


if __name__ == "__main__":
    main()
