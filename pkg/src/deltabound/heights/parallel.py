"""Sharded enumeration across worker processes."""

import asyncio
from concurrent.futures import ProcessPoolExecutor
from typing import List

import numpy as np
import structlog

from deltabound.config.settings import EnumerationConfig
from deltabound.core.errors import ResourceLimitError
from deltabound.heights.enumerate import PointEnumerator, Shard, select_enumerator
from deltabound.heights.model import compile_variety
from deltabound.models.variety import VarietyModel

logger = structlog.get_logger(__name__)


def _scan_worker(model_json: str, config_json: str, strategy: str, lead: int, bound: int) -> np.ndarray:
    """Runs in a worker process; the model travels as JSON."""
    model = VarietyModel.model_validate_json(model_json)
    config = EnumerationConfig.model_validate_json(config_json)
    enumerator = select_enumerator(compile_variety(model), config, strategy)
    return enumerator.scan_shard(Shard(lead, bound))


def _check_cap(enumerator: PointEnumerator, total: int, shard: Shard) -> None:
    if total > enumerator.config.max_points:
        raise ResourceLimitError(
            f"more than {enumerator.config.max_points} points (cap reached in shard x0={shard.lead})"
        )


async def scan_shards_async(enumerator: PointEnumerator, bound: int) -> List[np.ndarray]:
    """Scan every shard on a process pool; results come back in shard order."""
    enumerator.check_budget(bound)
    model_json = enumerator.variety.model.model_dump_json()
    config_json = enumerator.config.model_dump_json()
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=enumerator.config.threads) as pool:
        tasks = [
            loop.run_in_executor(
                pool, _scan_worker, model_json, config_json, enumerator.name, s.lead, s.bound
            )
            for s in enumerator.shards(bound)
        ]
        results = await asyncio.gather(*tasks)
    logger.debug(
        "enumerate.parallel",
        shards=len(results),
        workers=enumerator.config.threads,
        points=sum(r.shape[0] for r in results),
    )
    total = 0
    for shard, points in zip(enumerator.shards(bound), results):
        total += points.shape[0]
        _check_cap(enumerator, total, shard)
    return list(results)


def _loop_running() -> bool:
    try:
        asyncio.get_running_loop()
    except RuntimeError:
        return False
    return True


def scan_shards(enumerator: PointEnumerator, bound: int) -> List[np.ndarray]:
    """Per-shard point arrays up to ``bound``, sequential when threads == 1.

    Inside a running event loop the shards are scanned sequentially; await
    ``scan_shards_async`` there to use the worker pool.
    """
    if enumerator.config.threads > 1:
        if not _loop_running():
            return asyncio.run(scan_shards_async(enumerator, bound))
        logger.warning(
            "enumerate.loop_running",
            threads=enumerator.config.threads,
            hint="await scan_shards_async for parallel scans",
        )
    enumerator.check_budget(bound)
    results: List[np.ndarray] = []
    total = 0
    for shard in enumerator.shards(bound):
        points = enumerator.scan_shard(shard)
        total += points.shape[0]
        _check_cap(enumerator, total, shard)
        logger.debug("enumerate.shard", lead=shard.lead, points=points.shape[0])
        results.append(points)
    return results
