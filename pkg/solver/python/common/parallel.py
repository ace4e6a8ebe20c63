import concurrent.futures
import logging
from collections.abc import Callable, Iterable
from typing import TypeVar

from .. import env


logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def map_cases(fn: Callable[[T], R], cases: Iterable[T], jobs: int | None = None) -> list[R]:
    """
    Maps fn over independent cases, in a process pool when more than one job is allowed.
    Results keep the order of the cases. fn must be a picklable module-level callable.
    """
    jobs = env.jobs if jobs is None else jobs
    cases = list(cases)
    if jobs <= 1 or len(cases) <= 1:
        return [fn(case) for case in cases]
    logger.info("Running %d cases on %d workers", len(cases), jobs)
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(fn, cases, chunksize=1))
