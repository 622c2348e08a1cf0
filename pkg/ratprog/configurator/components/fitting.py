# -*- coding: utf-8 -*-
from ...support.converters import asfloat, asint
from ...configuration.utils import RatProgConfigError
from ..base import ConfigurationComponent, ConfigReadyConfigurationAction


class FittingConfigurationComponent(ConfigurationComponent):
    """Options for rational function estimation.

    Supported Options:

        * ``fit.rank_tol``: singular values below ``rank_tol * sigma_1``
          count as rank deficiency (default ``1e-10``).
        * ``fit.degree``: default per-variable degree bound for both
          numerator and denominator (default ``2``).
    """
    id = 'fit'

    def get_defaults(self):
        return {
            'fit.rank_tol': 1e-10,
            'fit.degree': 2,
        }

    def get_coercion(self):
        return {
            'fit.rank_tol': asfloat,
            'fit.degree': asint,
        }

    def get_actions(self):
        return (ConfigReadyConfigurationAction(self._check),)

    def _check(self, conf):
        if not 0 < conf['fit.rank_tol'] < 1:
            raise RatProgConfigError('fit.rank_tol must be in (0, 1), got %r' % conf['fit.rank_tol'],
                                     option='fit.rank_tol')
        if conf['fit.degree'] < 0:
            raise RatProgConfigError('fit.degree must not be negative', option='fit.degree')
