"""
Настройка логирования и индикаторов прогресса для скриптов.
"""
import logging
import sys

PACKAGE_LOGGER = 'src'


def setup_logging(verbose: bool = False, quiet: bool = False) -> logging.Logger:
    """
    Один обработчик на stderr для логгеров пакета

    Args:
        verbose: уровень DEBUG
        quiet: только предупреждения и ошибки

    Returns:
        логгер пакета
    """
    logger = logging.getLogger(PACKAGE_LOGGER)
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
        logger.addHandler(handler)
    if verbose:
        logger.setLevel(logging.DEBUG)
    elif quiet:
        logger.setLevel(logging.WARNING)
    else:
        logger.setLevel(logging.INFO)
    return logger


def progress_enabled(quiet: bool = False) -> bool:
    """Прогресс tqdm показывается только на терминале и без --quiet"""
    return not quiet and sys.stderr.isatty()
