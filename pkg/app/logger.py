import logging
import os

from app.constants import settings

log_filename = "tracing.log"
# every module logger lives under this name and shares its file handler
PACKAGE_LOGGER = "app"


def setup_logger(name: str) -> logging.Logger:

    # Create the logs directory if it doesn't exist
    os.makedirs(settings.log_dir, exist_ok=True)

    package = logging.getLogger(PACKAGE_LOGGER)
    package.setLevel(settings.log_level)

    path = os.path.abspath(os.path.join(settings.log_dir, log_filename))
    current = [h for h in package.handlers if isinstance(h, logging.FileHandler)]
    if not any(h.baseFilename == path for h in current):
        # log_dir changed since the last call: move to the new file
        for handler in current:
            package.removeHandler(handler)
            handler.close()
        file_handler = logging.FileHandler(path, encoding='utf-8')
        file_handler.setLevel(settings.log_level)

        formatter = logging.Formatter('%(asctime)s - %(name)s - %(message)s', datefmt='%m-%d %H:%M:%S')
        file_handler.setFormatter(formatter)

        package.addHandler(file_handler)

    if name != PACKAGE_LOGGER and not name.startswith(PACKAGE_LOGGER + "."):
        name = f"{PACKAGE_LOGGER}.{name}"
    return logging.getLogger(name)
