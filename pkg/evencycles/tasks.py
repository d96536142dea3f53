import logging
import multiprocessing
from collections import namedtuple

from .errors import EvenCyclesError

logger = logging.getLogger(__name__)

Task = namedtuple('Task', ['index', 'fn', 'args', 'kwargs'])
TaskResult = namedtuple('TaskResult', ['index', 'status', 'value'])


def _run(task):
    # anything but an EvenCyclesError propagates
    try:
        value = task.fn(*task.args, **task.kwargs)
    except EvenCyclesError as e:
        return TaskResult(task.index, "failed", e)
    return TaskResult(task.index, "completed", value)


def _is_found(value):
    return value is not None


class SearchPool:
    """
    Ordered fan-out of independent searches.

    Tasks are submitted in preference order; ``first_success`` returns the
    value of the lowest-index task whose result passes ``success`` (default:
    not None), so the answer never depends on worker scheduling. With
    ``jobs=1`` everything runs in-process and stops at the first success.
    ``outcomes`` keeps the TaskResults of every task that ran.
    """

    def __init__(self, jobs=1, success=_is_found):
        self.jobs = max(1, int(jobs))
        self.success = success
        self.tasks = []
        self.outcomes = []

    def submit(self, fn, *args, **kwargs):
        task = Task(len(self.tasks), fn, args, kwargs)
        self.tasks.append(task)
        return task.index

    def _workers(self):
        return min(self.jobs, len(self.tasks), multiprocessing.cpu_count())

    def _note(self, result):
        self.outcomes.append(result)
        if result.status == "failed":
            logger.debug("task %d failed: %s", result.index, result.value)
        return result.status == "completed" and self.success(result.value)

    def results(self):
        """Run every task and return their TaskResults in submission order."""
        if self.jobs == 1 or len(self.tasks) <= 1:
            outcomes = [_run(task) for task in self.tasks]
        else:
            with multiprocessing.Pool(self._workers()) as pool:
                outcomes = pool.map(_run, self.tasks)
        for result in outcomes:
            self._note(result)
        return outcomes

    def first_success(self):
        if self.jobs == 1 or len(self.tasks) <= 1:
            for task in self.tasks:
                result = _run(task)
                if self._note(result):
                    return result.value
            return None

        logger.debug("fanning %d tasks over %d workers", len(self.tasks), self._workers())
        with multiprocessing.Pool(self._workers()) as pool:
            # imap keeps submission order, so the first success seen is the lowest index
            for result in pool.imap(_run, self.tasks):
                if self._note(result):
                    pool.terminate()
                    return result.value
        return None
