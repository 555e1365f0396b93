import logging
from concurrent.futures import ProcessPoolExecutor

logger = logging.getLogger(__name__)

CHUNKS_PER_WORKER = 4


def partition(total, parts):
    """Split ``[0, total)`` into at most ``parts`` contiguous, non-empty ranges."""
    parts = max(1, min(parts, total))
    size, extra = divmod(total, parts)
    ranges = []
    start = 0
    for index in range(parts):
        stop = start + size + (1 if index < extra else 0)
        ranges.append((start, stop))
        start = stop
    return ranges


def run_partitioned(fn, total, workers=1, args=()):
    """
    Call ``fn(*args, start, stop)`` over contiguous slices of ``[0, total)``.

    Partial results come back in range order whatever the worker count, so a
    caller folding them left to right gets the same answer as a single
    inline call. ``fn`` must be a module-level function so it pickles.
    """
    workers = max(1, int(workers))
    if workers == 1 or total <= 1:
        return [fn(*args, 0, total)]
    ranges = partition(total, workers * CHUNKS_PER_WORKER)
    logger.info('Dispatching %d slices to %d workers', len(ranges), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *args, start, stop) for start, stop in ranges]
        return [future.result() for future in futures]


def map_in_order(fn, items, workers=1):
    """``map`` that fans out to a process pool and keeps input order."""
    items = list(items)
    workers = max(1, int(workers))
    if workers == 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (workers * CHUNKS_PER_WORKER))))
