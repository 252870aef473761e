"""
logger.py
---------

Structured logging for wspec, built on structlog with a colorlog handler.

- development/testing: colored console rendering for humans.
- production: one JSON object per line for log aggregation.
- The handler writes to stderr, so CSV/JSON reports printed on stdout by the
  CLI are never interleaved with log lines.
- Experiment context (experiment name, weight function, seed) is bound with
  `bind_experiment` and merged into every event through structlog
  contextvars, so worker-side log lines stay attributable.

Usage:
    from wspec.logger import logger
    logger.info("Scan finished.", n=8, trees=23)
"""

import os
import sys
import logging
import colorlog
import structlog

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _resolve_level(raw):
    level = (raw or "INFO").upper()
    return level if level in LOG_LEVELS else "INFO"


def configure_logging(env=None, level=None):
    """
    Configure the stdlib root handler and structlog processors.

    Args:
        env (str, optional): Environment name; defaults to WSPEC_ENV.
        level (str, optional): Log level; defaults to LOG_LEVEL.
    """
    env = (env or os.environ.get("WSPEC_ENV", "development")).lower()
    level = _resolve_level(level or os.environ.get("LOG_LEVEL"))

    handler = colorlog.StreamHandler(sys.stderr)
    handler.setFormatter(
        colorlog.ColoredFormatter(
            "%(log_color)s[%(asctime)s] %(levelname)s %(name)s: %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
            log_colors={
                "DEBUG": "cyan",
                "INFO": "green",
                "WARNING": "yellow",
                "ERROR": "red",
                "CRITICAL": "bold_red",
            },
        )
    )
    logging.basicConfig(
        level=getattr(logging, level), handlers=[handler], force=True
    )

    if env in ("development", "testing"):
        renderer = structlog.dev.ConsoleRenderer(colors=True)
    else:
        renderer = structlog.processors.JSONRenderer(sort_keys=True)

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.TimeStamper(fmt="%Y-%m-%d %H:%M:%S"),
            structlog.stdlib.add_log_level,
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            renderer,
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )


def bind_experiment(**context):
    """Bind experiment-wide context (name, f, seed...) to subsequent events."""
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(**context)


configure_logging()

logger = structlog.get_logger("wspec")
