import sys
from datetime import datetime

from loguru import logger as _logger

from conic_floors.config import PROJECT_ROOT, config


def define_log_level(
    print_level: str = "INFO", logfile_level: str = "DEBUG", write_file: bool = False
):
    """Install the stderr sink and, optionally, a timestamped file under logs/"""
    _logger.remove()
    if config.logging.console:
        _logger.add(sys.stderr, level=print_level)
    if write_file:
        log_dir = PROJECT_ROOT / config.logging.log_dir
        log_dir.mkdir(parents=True, exist_ok=True)
        log_name = datetime.now().strftime("%Y-%m-%d_%H-%M-%S") + ".log"
        _logger.add(log_dir / log_name, level=logfile_level)
    return _logger


logger = define_log_level(
    print_level=config.logging.level, write_file=config.logging.file
)


def get_logger():
    return logger
