"""Verification suites for the numerical lab."""

import logging
from collections.abc import Callable, Sequence

from prahmlab.core.config import RunConfig
from prahmlab.core.exceptions import ConfigError
from prahmlab.core.models import VerificationReport
from prahmlab.verification.base import CheckCollector, VerificationSuite
from prahmlab.verification.helical import HelicalSuite
from prahmlab.verification.interaction import InteractionSuite
from prahmlab.verification.ladder import LadderSuite
from prahmlab.verification.maxwell import MaxwellSuite
from prahmlab.verification.packet import PacketSuite
from prahmlab.verification.txline import TxLineSuite

logger = logging.getLogger(__name__)

# Registry mapping suite names to suite classes, in run order
SUITE_REGISTRY: dict[str, type[VerificationSuite]] = {
    suite.NAME: suite
    for suite in (
        MaxwellSuite,
        HelicalSuite,
        PacketSuite,
        InteractionSuite,
        LadderSuite,
        TxLineSuite,
    )
}


def resolve_suites(name: str) -> list[str]:
    """Expand "all" to every registered suite.

    Raises:
        ConfigError: If the name is not registered.
    """
    if name == "all":
        return list(SUITE_REGISTRY)
    if name not in SUITE_REGISTRY:
        raise ConfigError(f"unknown suite {name!r}", key="suite")
    return [name]


def run_suites(
    config: RunConfig,
    names: Sequence[str],
    on_suite: Callable[[str], None] | None = None,
) -> VerificationReport:
    """Validate the configuration and run the named suites in order.

    Args:
        config: Run configuration.
        names: Registered suite names.
        on_suite: Called with each suite name once it has finished.

    Returns:
        VerificationReport with every check and suite error.

    Raises:
        ConfigError: If the configuration is invalid; nothing runs.
    """
    mode = config.validate()
    collector = CheckCollector()
    for name in names:
        suite = SUITE_REGISTRY[name](config, mode)
        suite.execute(collector)
        if on_suite is not None:
            on_suite(name)
    report = collector.get_results()
    logger.info("verification finished: %s", report.stats)
    return report


__all__ = [
    "SUITE_REGISTRY",
    "CheckCollector",
    "HelicalSuite",
    "InteractionSuite",
    "LadderSuite",
    "MaxwellSuite",
    "PacketSuite",
    "TxLineSuite",
    "VerificationSuite",
    "resolve_suites",
    "run_suites",
]
