"""`parfor`"""
import logging
import multiprocessing

import joblib

logger = logging.getLogger(__name__)

#: joblib backend behind each ``scheduler`` name.
_BACKENDS = {'threading': 'threading', 'multiprocessing': 'loky'}


def parfor(func, items, n_jobs=-1, engine='joblib', scheduler='threading',
           func_kwargs=None):
    """Apply ``func`` to every item, possibly in parallel

    Parameters
    ----------
    func : callable
        Called as ``func(item, **func_kwargs)``
    items : iterable
        Independent inputs, e.g. family members of a sweep
    n_jobs : int, optional
        Number of parallel jobs, -1 for all CPUs but one
    engine : {'joblib', 'serial'}, optional
        'serial' runs a plain loop, which is handy for debugging
    scheduler : {'threading', 'multiprocessing'}, optional
        joblib backend (ignored by the 'serial' engine)
    func_kwargs : dict, optional
        Keyword arguments shared by all calls

    Returns
    -------
    results : list
        One entry per item, in input order
    """
    kwargs = {} if func_kwargs is None else dict(func_kwargs)
    items = list(items)
    if n_jobs == -1:
        n_jobs = max(1, multiprocessing.cpu_count() - 1)
    engine = 'serial' if engine is None else engine.lower()
    if engine == 'serial':
        return [func(item, **kwargs) for item in items]
    if engine != 'joblib':
        raise ValueError(f'Acceptable values for "engine" are: "serial" or '
                         f'"joblib", not "{engine}".')
    if scheduler not in _BACKENDS:
        raise ValueError(f'Acceptable values for "scheduler" are: '
                         f'{", ".join(_BACKENDS)}, not "{scheduler}".')
    logger.debug(f'parfor: {len(items)} items on {n_jobs} {scheduler} jobs')
    delayed = joblib.delayed(func)
    return list(joblib.Parallel(n_jobs=n_jobs, backend=_BACKENDS[scheduler])(
        delayed(item, **kwargs) for item in items))
