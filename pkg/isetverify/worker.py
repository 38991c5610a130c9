# isetverify/worker.py
import functools
import logging
import time
from collections import OrderedDict
from multiprocessing import Pool
from typing import Any, Dict, Iterator, List, Optional, Tuple

from tqdm import tqdm

from .config import Settings
from .errors import BudgetExceededError
from .graphs.enumeration import Budget, iter_class_forms, iter_classes, partition_work, replay_classes
from .graphs.graph import Graph
from .models.graph_specs import EnumSpec, ShardSpec
from .services.kernels import KERNELS, ShardResult

logger = logging.getLogger(__name__)

# Canonical words of finished serial enumerations, most recently used last.
_streams: "OrderedDict[str, Tuple[int, ...]]" = OrderedDict()


def clear_stream_cache() -> None:
    _streams.clear()


def _class_stream(spec: EnumSpec, budget: Budget, cache_size: int) -> Iterator[Graph]:
    """Serial class stream; a complete run is recorded so later scans of the same spec replay it."""
    if cache_size <= 0:
        yield from iter_classes(spec, None, budget)
        return
    key = spec.model_dump_json()
    words = _streams.get(key)
    if words is not None:
        _streams.move_to_end(key)
        logger.debug(f"Replaying {len(words)} recorded classes for {spec.model_dump(exclude_defaults=True)}")
        yield from replay_classes(spec, words, budget)
        return
    recorded = []
    for form, g in iter_class_forms(spec, None, budget):
        recorded.append(form.bits)
        yield g
    _streams[key] = tuple(recorded)
    while len(_streams) > cache_size:
        _streams.popitem(last=False)


def scan_shard_task(payload: Dict[str, Any]) -> ShardResult:
    """
    Worker task: walks one enumeration shard and runs the named kernel on every class.
    The payload is plain data so it pickles across processes.
    """
    kernel = KERNELS[payload["kernel"]]
    spec = EnumSpec(**payload["spec"])
    shard = ShardSpec(**payload["shard"]) if payload.get("shard") else None
    budget = Budget(**payload["budget"])
    params = payload.get("params", {})

    label = "serial" if shard is None else f"{shard.index + 1}/{shard.count}"
    logger.debug(f"Scanning shard {label} of {spec.model_dump()} with kernel {payload['kernel']}")
    result = ShardResult()
    if shard is None:
        classes = _class_stream(spec, budget, payload.get("cache_size", 0))
    else:
        classes = iter_classes(spec, shard, budget)
    if payload.get("progress"):
        classes = tqdm(classes, desc=payload["kernel"], unit="class")
    for g in classes:
        result.classes += 1
        kernel(g, params, result)
    result.trim()
    logger.debug(f"Shard {label} finished: {result.classes} classes, {result.cases} cases")
    return result


def _budget_fields(settings: Settings) -> Dict[str, Any]:
    """One absolute deadline for the whole scan, shared by every shard."""
    deadline = None if settings.timeout_seconds is None else time.time() + settings.timeout_seconds
    return {
        "max_classes": settings.max_classes,
        "timeout_seconds": settings.timeout_seconds,
        "max_vertices": settings.max_enumeration_vertices,
        "allow_n10": settings.allow_n10,
        "deadline": deadline,
    }


def run_scan(kernel: str, spec: EnumSpec, params: Optional[Dict[str, Any]], settings: Settings) -> ShardResult:
    """Runs a kernel over every class of ``spec``, in-process or across ``settings.jobs`` processes."""
    if kernel not in KERNELS:
        raise KeyError(f"unknown kernel '{kernel}'")
    base = {
        "kernel": kernel,
        "spec": spec.model_dump(),
        "params": params or {},
        "budget": _budget_fields(settings),
    }
    # Fail fast on the vertex cap before any process starts.
    Budget(**base["budget"]).admit(spec.n)

    if settings.jobs <= 1:
        return scan_shard_task({**base, "shard": None, "progress": settings.progress, "cache_size": settings.stream_cache_size})

    shards = partition_work(spec, settings.jobs * settings.shard_factor, budget=Budget(**base["budget"]))
    payloads: List[Dict[str, Any]] = [{**base, "shard": shard.model_dump()} for shard in shards]
    logger.info(f"Scanning n={spec.n} delta={spec.min_degree} with {settings.jobs} workers over {len(payloads)} shards")
    with Pool(processes=settings.jobs) as pool:
        results = pool.imap_unordered(scan_shard_task, payloads)
        if settings.progress:
            results = tqdm(results, total=len(payloads), desc=kernel, unit="shard")
        merged = functools.reduce(ShardResult.merge, results, ShardResult())

    if settings.max_classes is not None and merged.classes > settings.max_classes:
        raise BudgetExceededError(f"class budget of {settings.max_classes} exceeded ({merged.classes} classes)")
    return merged
