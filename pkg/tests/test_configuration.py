"""
Testing for RatProg configuration
"""
import pytest

from ratprog.configuration.utils import coerce_options
from ratprog.configurator import ToolkitConfigurator
from ratprog.configurator.base import (ConfigurationComponent, Configurator,
                                       ConfigReadyConfigurationAction)
from ratprog.configurator.components.profile import PROFILE_ENVIRON
from ratprog.exceptions import RatProgConfigError
from ratprog.support.converters import asint, aschoice


def test_coerce_options():
    opts = {'search.jobs': '5', 'search.rep_mode': 'CEIL'}
    conf = coerce_options(opts, {'search.jobs': asint, 'search.rep_mode': aschoice('real', 'ceil')})
    assert conf == {'search.jobs': 5, 'search.rep_mode': 'ceil'}
    assert opts['search.jobs'] == '5'


def test_coerce_options_failure():
    with pytest.raises(RatProgConfigError) as exc:
        coerce_options({'search.jobs': 'many'}, {'search.jobs': asint})
    assert exc.value.context['option'] == 'search.jobs'
    assert 'search.jobs' in str(exc.value)


class TestConfigurator(object):
    def setup_method(self):
        self.cfg = Configurator()

    def test_repr_action(self):
        act = ConfigReadyConfigurationAction()
        assert repr(act) == "<ConfigReadyConfigurationAction: None>"

    def test_empty_blueprint(self):
        assert self.cfg.configure({'RANDOM_VALUE': 5}) == {'RANDOM_VALUE': 5}

    def test_component_without_id(self):
        class TestComponentFirst(ConfigurationComponent):
            pass

        with pytest.raises(ValueError) as exc:
            self.cfg.register(TestComponentFirst)
        assert str(exc.value).startswith('ConfigurationComponent must provide an id class attribute')

    def test_component_registered_twice(self):
        class TestComponentFirst(ConfigurationComponent):
            id = 'TESTCOMPONENT'

        self.cfg.register(TestComponentFirst)
        with pytest.raises(RatProgConfigError):
            self.cfg.register(TestComponentFirst)

    def test_component_defaults_and_actions(self):
        seen = []

        class TestComponent(ConfigurationComponent):
            id = 'test'

            def get_defaults(self):
                return {'test.value': '3'}

            def get_coercion(self):
                return {'test.value': asint}

            def get_actions(self):
                return (ConfigReadyConfigurationAction(seen.append), )

        self.cfg.register(TestComponent)
        conf = self.cfg.configure({'other': None})
        assert conf.test.value == 3
        assert 'other' not in conf
        assert seen == [conf]


class TestToolkitConfigurator(object):
    def setup_method(self):
        self.cfg = ToolkitConfigurator()

    def test_defaults(self, monkeypatch):
        monkeypatch.delenv(PROFILE_ENVIRON, raising=False)
        conf = self.cfg.configure()
        assert conf['fit.rank_tol'] == 1e-10
        assert conf['fit.degree'] == 2
        assert conf['ir.step_limit'] == 10 ** 6
        assert conf['profile.path'] is None
        assert conf['synth.seed'] == 0
        assert conf['synth.noise'] is None
        assert conf.search.jobs == 1
        assert conf.search.tie_tolerance == 1e-12

    def test_coercion(self):
        conf = self.cfg.configure({'search.jobs': '8', 'synth.noise': '0.01'})
        assert conf['search.jobs'] == 8
        assert conf['synth.noise'] == 0.01

    def test_profile_from_environment(self, monkeypatch):
        monkeypatch.setenv(PROFILE_ENVIRON, '/tmp/device.profile')
        assert self.cfg.configure()['profile.path'] == '/tmp/device.profile'
        conf = self.cfg.configure({'profile.path': 'given.profile'})
        assert conf['profile.path'] == 'given.profile'

    @pytest.mark.parametrize('options', [
        {'search.jobs': 0},
        {'search.dims': 4},
        {'search.min_threads': 64, 'search.max_threads': 32},
        {'search.max_threads': 2048},
        {'search.rep_mode': 'floor'},
        {'fit.rank_tol': 2},
        {'fit.degree': -1},
        {'ir.step_limit': 0},
        {'synth.noise': -0.1},
    ])
    def test_invalid(self, options):
        with pytest.raises(RatProgConfigError):
            self.cfg.configure(options)
