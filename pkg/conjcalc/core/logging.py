import logging
from conjcalc import core
import os
import sys


def setup_file_logger(output_folder: str) -> str:
    """Add a file handler on the root logger and return the log file path"""

    # Create folder if it doesn't exist
    if not os.path.exists(output_folder):
        os.makedirs(output_folder)

    logfile = os.path.join(output_folder, core.config.constants.LOGFILE_NAME)
    logfile_handler = logging.FileHandler(logfile)
    logfile_handler.setLevel(core.config.constants.LOGLEVEL_FILE)
    logfile_handler.setFormatter(core.config.constants.LOGFORMAT_FILE)
    logging.getLogger().addHandler(logfile_handler)

    return logfile


class ErrorFlagHandler(logging.Handler):
    """Counts ERRORs so the app can report failed checks at exit"""

    def __init__(self):
        super().__init__()
        self.errors = 0

    def emit(self, record):
        if record.levelno >= logging.ERROR:
            self.errors += 1

    def reset(self) -> None:
        self.errors = 0

    def print_status(self):
        if self.errors > 0:
            print(file=sys.stderr)
            print(
                f"There {'were' if self.errors > 1 else 'was'} {self.errors} "
                f"error{'s' if self.errors > 1 else ''} during the "
                "run. Pass --log-dir to keep a log file "
                f"('{core.config.constants.LOGFILE_NAME}') with the details.",
                file=sys.stderr,
            )
