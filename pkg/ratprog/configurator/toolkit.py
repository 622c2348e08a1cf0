# -*- coding: utf-8 -*-
from .base import Configurator
from .components.fitting import FittingConfigurationComponent
from .components.ir import IRConfigurationComponent
from .components.profile import ProfileConfigurationComponent
from .components.search import SearchConfigurationComponent
from .components.synth import SynthConfigurationComponent


class ToolkitConfigurator(Configurator):
    """Configurator with every component the command line needs.

    Usage::

        conf = ToolkitConfigurator().configure({'search.jobs': '8'})
        conf.search.jobs  # -> 8
    """
    def __init__(self):
        super(ToolkitConfigurator, self).__init__()
        self.register(FittingConfigurationComponent)
        self.register(IRConfigurationComponent)
        self.register(ProfileConfigurationComponent)
        self.register(SearchConfigurationComponent)
        self.register(SynthConfigurationComponent)
