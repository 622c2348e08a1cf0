# -*- coding: utf-8 -*-
import logging
import os

from ..base import ConfigurationComponent, ConfigReadyConfigurationAction

log = logging.getLogger(__name__)

PROFILE_ENVIRON = 'RATPROG_PROFILE'


class ProfileConfigurationComponent(ConfigurationComponent):
    """Locates the device profile.

        * ``profile.path``: path of a ``key=value`` device profile. When not
          given the ``RATPROG_PROFILE`` environment variable is used.
    """
    id = 'profile'

    def get_defaults(self):
        return {'profile.path': None}

    def get_actions(self):
        return (ConfigReadyConfigurationAction(self._from_environ),)

    def _from_environ(self, conf):
        if conf.get('profile.path') is None and os.environ.get(PROFILE_ENVIRON):
            conf['profile.path'] = os.environ[PROFILE_ENVIRON]
            log.debug('Device profile taken from %s: %s', PROFILE_ENVIRON, conf['profile.path'])
