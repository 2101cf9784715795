""" Partitioning of sweeps across worker processes.  Results are always
merged in range order, so the worker count never changes the output. """

from concurrent.futures import ProcessPoolExecutor


def chunk_ranges(n, workers):
    """ Split ``[0, n)`` into at most ``workers`` contiguous, nearly equal
    ``(start, stop)`` ranges. """
    workers = max(1, min(int(workers), n)) if n else 1
    size, extra = divmod(n, workers)
    ranges = []
    start = 0
    for w in range(workers):
        stop = start + size + (1 if w < extra else 0)
        ranges.append((start, stop))
        start = stop
    return ranges


def run_chunks(func, args, n, workers=1):
    """ Evaluate ``func(*args, start, stop)`` for every range of
    ``chunk_ranges(n, workers)`` and return the list of results in range
    order.  ``func`` must be a module-level function when ``workers > 1``. """
    ranges = chunk_ranges(n, workers)
    if len(ranges) <= 1:
        return [func(*(tuple(args) + r)) for r in ranges]
    with ProcessPoolExecutor(max_workers=len(ranges)) as executor:
        futures = [executor.submit(func, *(tuple(args) + r)) for r in ranges]
        return [f.result() for f in futures]


def run_items(func, args, items, workers=1):
    """ Like ``run_chunks`` but hands each worker a slice of ``items``:
    ``func(*args, items[start:stop])``. """
    ranges = chunk_ranges(len(items), workers)
    if len(ranges) <= 1:
        return [func(*(tuple(args) + (items[a:b],))) for a, b in ranges]
    with ProcessPoolExecutor(max_workers=len(ranges)) as executor:
        futures = [executor.submit(func, *(tuple(args) + (items[a:b],)))
                   for a, b in ranges]
        return [f.result() for f in futures]
