# -*- coding: utf-8 -*-
from ...support.converters import asint, asfloat
from ...configuration.utils import RatProgConfigError
from ..base import ConfigurationComponent, ConfigReadyConfigurationAction


class SynthConfigurationComponent(ConfigurationComponent):
    """Randomness of the synthetic instrumentor.

        * ``synth.seed``: seed of every random draw (default ``0``).
        * ``synth.noise``: relative uniform noise, ``None`` keeps the
          kernel description value.
    """
    id = 'synth'

    def get_defaults(self):
        return {
            'synth.seed': 0,
            'synth.noise': None,
        }

    def get_coercion(self):
        return {
            'synth.seed': asint,
            'synth.noise': asfloat,
        }

    def get_actions(self):
        return (ConfigReadyConfigurationAction(self._check),)

    def _check(self, conf):
        noise = conf.get('synth.noise')
        if noise is not None and noise < 0:
            raise RatProgConfigError('synth.noise must not be negative', option='synth.noise')
