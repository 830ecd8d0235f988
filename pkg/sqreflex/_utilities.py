"""
.. module:: _utilities
    :platform: Unix, Windows
    :synopsis: Defines internal utility functions, such as decorators, context managers and seed derivation

.. moduleauthor:: sqreflex developers

"""

import sys
import hashlib
from contextlib import contextmanager
from multiprocessing import Pool


# Initialize an empty __all__ for controlling imports
__all__ = []


@contextmanager
def pool_context(*args, **kwargs):
    """ Context manager for multiprocessing.Pool class """
    pool = Pool(*args, **kwargs)
    try:
        yield pool
    except Exception as e:
        raise e
    finally:
        pool.terminate()


def export(fn):
    """ Export decorator

    Please refer to the following SO article for details: https://stackoverflow.com/a/35710527
    """
    mod = sys.modules[fn.__module__]
    if hasattr(mod, '__all__'):
        mod.__all__.append(fn.__name__)
    else:
        mod.__all__ = [fn.__name__]
    return fn


def derive_seed(seed, *parts):
    """ Derives a 64-bit seed from the global seed and a textual description of the input.

    Every randomized routine re-derives its own seed this way, so the result of a call depends only on the global
    seed and the call's input, never on how many random numbers were drawn before it.

    :param seed: global seed
    :type seed: int
    :return: derived seed
    :rtype: int
    """
    digest = hashlib.sha256()
    digest.update(str(int(seed)).encode('utf-8'))
    for part in parts:
        digest.update(b'\x00')
        digest.update(str(part).encode('utf-8'))
    return int(digest.hexdigest()[:16], 16)


def run_ordered(worker, items, jobs=1):
    """ Applies the worker to the items, serially or on a process pool, keeping the input order.

    :param worker: picklable callable taking one item
    :param items: list of items
    :type items: list
    :param jobs: number of worker processes
    :type jobs: int
    :return: list of worker results in input order
    :rtype: list
    """
    if jobs is None or jobs <= 1 or len(items) < 2:
        return [worker(item) for item in items]
    with pool_context(processes=jobs) as pool:
        return pool.map(worker, items)
