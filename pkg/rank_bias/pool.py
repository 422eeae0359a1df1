"""Worker pool helpers shared by indexing, counterfactual rewriting and parsing."""
from collections import deque
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import Executor, ProcessPoolExecutor
from itertools import islice
from typing import TypeVar

T = TypeVar("T")
R = TypeVar("R")


def chunked(items: Iterable[T], size: int) -> Iterator[list[T]]:
    """Split an iterable in lists of at most `size` items."""
    it = iter(items)
    while chunk := list(islice(it, size)):
        yield chunk


def ordered_map(
    fn: Callable[[T], R],
    items: Iterable[T],
    *,
    workers: int = 1,
    executor_cls: type[Executor] = ProcessPoolExecutor,
) -> Iterator[R]:
    """Apply `fn` to every item, yielding results in input order.

    With one worker everything runs in the calling process. Otherwise at most
    twice as many tasks as workers are in flight, so memory stays bounded while
    reading a stream.

    Args:
    ----
        fn (Callable): Picklable function when using processes.
        items (Iterable): Task inputs, consumed lazily.
        workers (int): Pool size.
        executor_cls (type[Executor]): Pool implementation.

    Yields:
    ------
        R. Results in the order of `items`.
    """
    if workers <= 1:
        yield from map(fn, items)
        return
    with executor_cls(max_workers=workers) as pool:
        pending = deque()
        for item in items:
            pending.append(pool.submit(fn, item))
            if len(pending) >= 2 * workers:
                yield pending.popleft().result()
        while pending:
            yield pending.popleft().result()
