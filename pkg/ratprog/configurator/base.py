# -*- coding: utf-8 -*-
import logging
from collections import OrderedDict

from ..configuration.utils import coerce_options, RatProgConfigError
from ..util import Bunch

log = logging.getLogger(__name__)


class Configurator(object):
    """Manages a configuration process with multiple components.

    Multiple registered components will be configured by applying
    the options provided during configuration on top of a blueprint
    (a set of default options).

    The result will be a configuration :class:`.Bunch` where dotted
    options can be reached by prefix (``conf.search.jobs``) and whatever
    side effect each component triggered when being configured.
    """
    def __init__(self):
        self._blueprint = {}
        self._coercion = {}
        self._components = OrderedDict()

    def register(self, component_type):
        """Registers a new :class:`.ConfigurationComponent` in the configurator.

        The component defaults get merged into the blueprint, options
        an earlier component already provides are preserved.
        """
        component = component_type()
        if component.id in self._components:
            raise RatProgConfigError('Component %s already registered' % component.id)

        component._prepare_blueprint(self._blueprint)
        component._prepare_coercion(self._coercion)
        self._components[component.id] = component

    def configure(self, options=None):
        """Prepare a configuration using the configurator.

        ``None`` values in ``options`` mean "not provided" and leave
        the blueprint value in place. Once it's ready the configuration
        is returned.
        """
        conf = Bunch(self._blueprint)
        for key, value in (options or {}).items():
            if value is not None:
                conf[key] = value

        # Convert the loaded options according to the coercion functions
        # registered by each configuration component.
        conf.update(coerce_options(conf, self._coercion))

        for component in self._components.values():
            component._apply(ConfigReadyConfigurationAction, conf)

        log.debug("Configuration ready with components %s", list(self._components))
        return conf


class ConfigurationComponent(object):
    """Represents a configuration component that will collaborate in configuring the toolkit.

    Components provide defaults and coercions for the options in their
    namespace and can register actions that run once the options are
    merged and converted.
    """
    def __init__(self):
        if not hasattr(self, 'id'):
            raise ValueError('ConfigurationComponent must provide an id class attribute '
                             'to uniquely identify the component.')

        self._actions = {}
        for action in self.get_actions():
            self._register_action(action)

    def get_actions(self):
        """Can be overridden to provide a set of actions the component has the perform."""
        return tuple()

    def get_defaults(self):
        """Can be overridden to provide default values for configuration blueprint.

        Must return a dictionary in the form::

            {'option_name': 'value'}

        """
        return {}

    def get_coercion(self):
        """Can be overridden to provide coercion methods for options.

        Must return a dictionary in the form::

            {'option_name': coerce_function}
        """
        return {}

    def _register_action(self, action):
        self._actions.setdefault(action.__class__.__name__, []).append(action)

    def _prepare_blueprint(self, blueprint):
        defaults = self.get_defaults()
        for k, v in defaults.items():
            blueprint.setdefault(k, v)

    def _prepare_coercion(self, coercion):
        defaults = self.get_coercion()
        for k, v in defaults.items():
            coercion.setdefault(k, v)

    def _apply(self, action_type, conf):
        for action in self._actions.get(action_type.__name__, []):
            log.debug('%s applying %s', self.__class__.__name__, action)
            action(conf)


class _ConfigurationAction(object):
    """An action done by a :class:`.ConfigurationComponent` during configuration process."""
    def __init__(self, perform=None):
        self.perform = perform

    def __repr__(self):
        return '<%s: %r>' % (self.__class__.__name__, self.perform)

    def __call__(self, conf):
        return self.perform(conf)


class ConfigReadyConfigurationAction(_ConfigurationAction):
    """An action to be executed once the configuration is loaded and converted."""
    pass
