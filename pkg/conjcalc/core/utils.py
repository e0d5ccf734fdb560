import logging
import os
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Any, Callable, List, Optional, Sequence, TypeVar

import numpy as np
import orjson
from tqdm import tqdm

from conjcalc import core

logger = logging.getLogger(__name__)
logger.setLevel(core.config.constants.LOGLEVEL_MODULE_DEFAULT)

T = TypeVar("T")
R = TypeVar("R")


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    """Seeded generator, defaulting to constants.DEFAULT_SEED"""

    if seed is None:
        seed = core.config.constants.DEFAULT_SEED
    return np.random.default_rng(seed)


def spawn_rngs(seed: Optional[int], count: int) -> List[np.random.Generator]:
    """Independent generators for parallel work, reproducible per seed"""

    if seed is None:
        seed = core.config.constants.DEFAULT_SEED
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.default_rng(child) for child in children]


def load_json(path: str) -> Any:
    """Read a JSON file with orjson

    Raises
    ------
    FileNotFoundError
        If the file does not exist
    """

    if not os.path.exists(path):
        raise FileNotFoundError(f"File not found: {path}")
    with open(path, "rb") as f:
        return orjson.loads(f.read())


def dump_json(payload: Any) -> str:
    """Deterministic, indented JSON text"""

    return orjson.dumps(
        payload,
        option=orjson.OPT_INDENT_2
        | orjson.OPT_SORT_KEYS
        | orjson.OPT_SERIALIZE_NUMPY,
    ).decode("utf-8")


def run_parallel(
    func: Callable[[T], R],
    items: Sequence[T],
    description: str,
    threads: Optional[int] = None,
    show_progress: bool = True,
) -> List[Optional[R]]:
    """Apply func to every item in a thread pool

    Results come back in the order of `items`. An item whose call raised is
    logged as an error and leaves None in its slot.

    Parameters
    ----------
    func : Callable[[T], R]
        The function to apply
    items : Sequence[T]
        The inputs
    description : str
        Label of the progress bar
    threads : Optional[int], optional
        Worker count, by default constants.VERIFY_THREADS
    show_progress : bool, optional
        Whether to draw a tqdm progress bar, by default True
    """

    if threads is None:
        threads = core.config.constants.VERIFY_THREADS

    results: List[Optional[R]] = [None] * len(items)
    with ThreadPoolExecutor(max_workers=threads) as executor:
        futures = {
            executor.submit(func, item): position
            for position, item in enumerate(items)
        }

        # Retrieve the results as they become available
        for future in tqdm(
            as_completed(futures),
            total=len(futures),
            desc=description,
            disable=not show_progress,
        ):
            position = futures[future]
            try:
                results[position] = future.result()
                logger.debug(f"{description}: item {position} finished")
            except Exception as e:
                logger.error(
                    f"{description}: item {position} generated an "
                    f"exception: {e}"
                )

    return results
