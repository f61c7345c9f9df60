import logging
import typing
from concurrent.futures import ThreadPoolExecutor

if typing.TYPE_CHECKING:
    from .client import FuzzyIDPy

T = typing.TypeVar("T")
R = typing.TypeVar("R")


class Dispatcher:
    """Dispatcher for evaluating oracle chunks.

    This class hands independent chunks of work to a pool of threads and
    gathers the results in submission order, so the combined result does not
    depend on the number of workers or on scheduling.

    Parameters:
        client (:obj:`FuzzyIDPy`, optional):
            The FuzzyIDPy client instance.

        workers (``int``):
            Number of worker threads; 1 evaluates in the calling thread.
    """

    def __init__(self, client: "FuzzyIDPy" = None, workers: int = 4):
        self.client = client
        self.workers = max(1, int(workers))
        self.logger = logging.getLogger(__name__)

        self._executor = None
        self._running = False

    def start(self):
        """Start the dispatcher."""
        if self._running:
            return

        if self.workers > 1:
            self._executor = ThreadPoolExecutor(max_workers=self.workers, thread_name_prefix="fuzzyid")
        self._running = True

    def stop(self):
        """Stop the dispatcher."""
        if not self._running:
            return

        self._running = False

        if self._executor:
            self._executor.shutdown()
            self._executor = None

    def __enter__(self) -> "Dispatcher":
        self.start()
        return self

    def __exit__(self, *exc_info):
        self.stop()

    def map(self, handler: typing.Callable[[T], R], chunks: typing.Iterable[T]) -> typing.List[R]:
        """Apply ``handler`` to every chunk.

        Parameters:
            handler (``callable``):
                Function of one chunk.

            chunks (``iterable``):
                The chunks to process.

        Returns:
            ``list``: Handler results in chunk order.
        """
        chunks = list(chunks)
        if not self._running or self._executor is None or len(chunks) < 2:
            return [handler(chunk) for chunk in chunks]

        self.logger.debug(f"Dispatching {len(chunks)} chunks to {self.workers} workers")
        futures = [self._executor.submit(handler, chunk) for chunk in chunks]
        results = []
        for index, future in enumerate(futures):
            try:
                results.append(future.result())
            except Exception as e:
                self.logger.error(f"Error in chunk {index}: {e}")
                for pending in futures[index + 1:]:
                    pending.cancel()
                raise
        return results
