"""Order-preserving map over worker processes."""

from concurrent.futures import ProcessPoolExecutor


def pmap(fn, items, workers=1):
    """``list(map(fn, items))``, optionally fanned out to processes.

    Results come back in input order, so output does not depend on the
    worker count.
    """
    items = list(items)
    if workers is None or workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))
