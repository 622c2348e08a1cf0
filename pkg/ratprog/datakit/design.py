"""Sample point selection."""
import itertools

from ..perfmodel.device import LaunchConfig, MAX_THREADS_PER_BLOCK


def _powers_of_two(limit):
    power = 1
    while power <= limit:
        yield power
        power *= 2


def enumerate_configs(max_threads=MAX_THREADS_PER_BLOCK, min_threads=32, dims=2):
    """Block shapes with power of two dimensions and ``min_threads <= T <= max_threads``.

    Sorted lexicographically by ``(bx, by, bz)``.
    """
    if not 1 <= min_threads <= max_threads <= MAX_THREADS_PER_BLOCK:
        raise ValueError('need 1 <= min_threads <= max_threads <= %d, got %d and %d'
                         % (MAX_THREADS_PER_BLOCK, min_threads, max_threads))
    if dims not in (1, 2, 3):
        raise ValueError('dims must be 1, 2 or 3, not %r' % (dims, ))

    sides = list(_powers_of_two(max_threads))
    configs = []
    for shape in itertools.product(sides, repeat=dims):
        threads = 1
        for side in shape:
            threads *= side
        if min_threads <= threads <= max_threads:
            configs.append(LaunchConfig(*shape))
    return sorted(configs)


def design_points(d_values, config_set):
    """Cartesian product of data parameters and configurations.

    ``d_values`` holds integers (one data parameter) or tuples of them.
    """
    d_values = [tuple(d) if isinstance(d, (tuple, list)) else (int(d), ) for d in d_values]
    config_set = list(config_set)
    if not d_values:
        raise ValueError('no data parameter values to sample')
    if not config_set:
        raise ValueError('no configurations to sample')
    return [(d, c) for d in d_values for c in config_set]
