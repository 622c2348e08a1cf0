# -*- coding: utf-8 -*-
from ...support.converters import asint, asfloat, aschoice
from ...configuration.utils import RatProgConfigError
from ..base import ConfigurationComponent, ConfigReadyConfigurationAction


class SearchConfigurationComponent(ConfigurationComponent):
    """Options of the configuration space and its exhaustive search.

        * ``search.rep_mode``: ``real`` or ``ceil`` for the number of
          block repetitions per SM (default ``real``).
        * ``search.jobs``: worker threads evaluating configurations.
        * ``search.min_threads``/``search.max_threads``: bounds of T.
        * ``search.dims``: 1, 2 or 3 dimensional thread blocks.
        * ``search.tie_tolerance``: relative tolerance of Ec ties.
    """
    id = 'search'

    def get_defaults(self):
        return {
            'search.rep_mode': 'real',
            'search.jobs': 1,
            'search.min_threads': 32,
            'search.max_threads': 1024,
            'search.dims': 2,
            'search.tie_tolerance': 1e-12,
        }

    def get_coercion(self):
        return {
            'search.rep_mode': aschoice('real', 'ceil'),
            'search.jobs': asint,
            'search.min_threads': asint,
            'search.max_threads': asint,
            'search.dims': asint,
            'search.tie_tolerance': asfloat,
        }

    def get_actions(self):
        return (ConfigReadyConfigurationAction(self._check),)

    def _check(self, conf):
        if conf['search.jobs'] < 1:
            raise RatProgConfigError('search.jobs must be at least 1', option='search.jobs')
        if conf['search.dims'] not in (1, 2, 3):
            raise RatProgConfigError('search.dims must be 1, 2 or 3', option='search.dims')
        if not 1 <= conf['search.min_threads'] <= conf['search.max_threads'] <= 1024:
            raise RatProgConfigError('thread bounds must satisfy 1 <= min <= max <= 1024',
                                     option='search.min_threads')
