from .base import Configurator, ConfigurationComponent, ConfigReadyConfigurationAction
from .components.fitting import FittingConfigurationComponent
from .components.ir import IRConfigurationComponent
from .components.profile import ProfileConfigurationComponent
from .components.search import SearchConfigurationComponent
from .components.synth import SynthConfigurationComponent
from .toolkit import ToolkitConfigurator
