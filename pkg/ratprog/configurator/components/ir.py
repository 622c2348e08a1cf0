# -*- coding: utf-8 -*-
from ...support.converters import asint
from ...configuration.utils import RatProgConfigError
from ..base import ConfigurationComponent, ConfigReadyConfigurationAction


class IRConfigurationComponent(ConfigurationComponent):
    """Options of the rational program interpreter.

        * ``ir.step_limit``: maximum interpreted instructions (default ``10**6``).
    """
    id = 'ir'

    def get_defaults(self):
        return {'ir.step_limit': 10 ** 6}

    def get_coercion(self):
        return {'ir.step_limit': asint}

    def get_actions(self):
        return (ConfigReadyConfigurationAction(self._check),)

    def _check(self, conf):
        if conf['ir.step_limit'] < 1:
            raise RatProgConfigError('ir.step_limit must be at least 1', option='ir.step_limit')
