"""kepler.runners -- running independent jobs in parallel"""

import logging
import multiprocessing
import multiprocessing.dummy

from typing import Callable, Optional

logger = logging.getLogger(__name__)

class PoolRunner:
    """PoolRunner: a simple runner that maps a job over independent inputs using a
thread pool of a given size
Optional parameters:
    * num_processes: the number of threads in the pool, which determines how
                     many jobs run at once (default: number of available cpus)
    * name: a label used in log messages (default: 'jobs')
    """
    def __init__(self, num_processes: Optional[int] = None, name: str = 'jobs'):
        self.num_processes = num_processes if num_processes else multiprocessing.cpu_count()
        self.name = name
        if self.num_processes < 1:
            raise ValueError('num_processes must be positive')

    def run(self, job: Callable, inputs: list) -> list:
        """runner.run(job, inputs) -> [job(input) for input in inputs], computed in
parallel and returned in input order. If any job raises, the first exception (in
input order) is re-raised after all jobs have finished."""
        if not isinstance(inputs, list):
            raise TypeError('inputs must be a list')
        if not inputs:
            return []
        logger.info(f'{self.name}: running {len(inputs)} jobs ({self.num_processes} parallel threads)')

        # wrap each job so failures come back as values rather than killing the pool
        def run_one(item):
            try:
                return True, job(item)
            except Exception as err:
                return False, err

        with multiprocessing.dummy.Pool(self.num_processes) as pool:
            outcomes = pool.map(run_one, inputs)

        failures = [value for ok, value in outcomes if not ok]
        if failures:
            logger.error(f'{self.name}: {len(failures)} of {len(inputs)} jobs failed.')
            raise failures[0]
        logger.info(f'{self.name}: completed {len(inputs)} jobs.')
        return [value for _, value in outcomes]
