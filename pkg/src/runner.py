# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""Runs theorem suites on a worker pool."""

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

from .config import SuiteConfig, thread_cap
from .errors import error_payload, log_error
from .logger import logger
from .models import SuiteResult
from .suites import SUITES
from .utils import format_duration, rng_for


class SuiteRunner:
    """
    Runs the configured suites, one task per suite.

    Each suite draws from its own generator seeded by (seed, suite name),
    so verdicts do not depend on scheduling or on which suites are selected.
    A suite that raises is logged and reported as errored; the others
    still run.
    """

    def __init__(self, config: SuiteConfig):
        self.config = config.validate()
        self._lock = threading.Lock()
        self._finished = 0

    def run(self, suites: Optional[List[str]] = None) -> List[SuiteResult]:
        names = list(suites if suites is not None else self.config.suites)
        workers = thread_cap(self.config.threads, len(names))
        logger.info(f"Running {len(names)} suite(s) with seed {self.config.seed} on {workers} thread(s)...")

        started = time.perf_counter()
        with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="pmmeas-suite") as pool:
            futures = [pool.submit(self._run_one, name, len(names)) for name in names]
            results = [f.result() for f in futures]

        failed = [r.name for r in results if not r.passed]
        elapsed = format_duration(time.perf_counter() - started)
        if failed:
            logger.warning(f"{len(failed)} of {len(results)} suite(s) failed in {elapsed}: {', '.join(failed)}")
        else:
            logger.ok(f"All {len(results)} suite(s) passed in {elapsed}")
        return results

    def _run_one(self, name: str, total: int) -> SuiteResult:
        suite = SUITES[name]
        result = SuiteResult(name=name, claim=suite.claim)
        started = time.perf_counter()
        try:
            result.checks = suite.run(self.config, rng_for(self.config.seed, name))
        except Exception as e:
            log_error(e, context=f"Suite '{name}'")
            result.error = error_payload(e)
        result.elapsed = time.perf_counter() - started

        with self._lock:
            self._finished += 1
            done = self._finished
        status = "passed" if result.passed else ("errored" if result.error else "FAILED")
        logger.info(f"[{done}/{total}] {name} {status} ({len(result.checks)} checks, {format_duration(result.elapsed)})")
        for check in result.checks:
            if not check.passed:
                logger.debug(f"{name}: {check.name} failed, witness={check.witness}")
        return result
