"""Run time step: evaluate a rational program over the configuration space."""
import logging
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

from ..exceptions import (DimensionMismatch, DivisionByZero, NoFeasibleConfig, ZeroOccupancy,
                          DenominatorNearZero)
from ..ir.interpreter import Interpreter
from ..ir.rational import as_rational
from ..perfmodel.device import PROFILE_FIELDS
from ..perfmodel.emit import INFEASIBLE
from .. import jsonify
from .models import estimate_cycles, CONFIG_VARIABLES

log = logging.getLogger(__name__)

DEFAULT_TIE_TOLERANCE = 1e-12

RankedConfig = namedtuple('RankedConfig', 'config cycles occupancy case_tag')


class SearchResult(object):
    """Feasible configurations ranked by estimated cycles.

    ``ties`` counts the other configurations whose estimate equals the
    chosen one's within the tie tolerance; the chosen configuration is
    the one of highest occupancy among them, then the smallest
    ``(bx, by, bz)``.
    """
    def __init__(self, data_params, ranked, ties=0, infeasible=()):
        self.data_params = tuple(data_params)
        self.ranked = list(ranked)
        self.ties = ties
        self.infeasible = list(infeasible)

    @property
    def chosen(self):
        return self.ranked[0].config

    @property
    def cycles(self):
        return self.ranked[0].cycles

    def __eq__(self, other):
        return (isinstance(other, SearchResult) and self.data_params == other.data_params and
                self.ranked == other.ranked and self.ties == other.ties and
                self.infeasible == other.infeasible)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return '<SearchResult %s at %s: %.6g cycles, %d ties>' % (
            self.chosen, self.data_params, self.cycles, self.ties)

    def __json__(self):
        return {
            'data_params': list(self.data_params),
            'chosen': str(self.chosen),
            'cycles': self.cycles,
            'ties': self.ties,
            'ranked': [dict(entry._asdict(), config=str(entry.config)) for entry in self.ranked],
            'infeasible': [str(config) for config in self.infeasible],
        }


def rp_bindings(rp, data_params, config, hw=None):
    """Input bindings of a cycles program for one data size and configuration.

    Inputs other than the block dimensions and the device profile fields
    are the data parameters, bound in order. A block dimension the
    program does not take must be 1.
    """
    data_names = [v for v in rp.inputs if v not in CONFIG_VARIABLES and v not in PROFILE_FIELDS]
    data_params = tuple(data_params)
    if len(data_names) != len(data_params):
        raise DimensionMismatch('program takes %d data parameters (%s), got %d'
                                % (len(data_names), ', '.join(data_names), len(data_params)))
    bindings = dict(zip(data_names, data_params))
    for name, side in zip(CONFIG_VARIABLES, config):
        if name in rp.inputs:
            bindings[name] = side
        elif side != 1:
            raise DimensionMismatch('program has no input %s for block shape %s'
                                    % (name, config))
    for field in PROFILE_FIELDS:
        if field in rp.inputs:
            if hw is None:
                raise DimensionMismatch('program needs the device profile field %s' % field)
            bindings[field] = as_rational(getattr(hw, field))
    return bindings


class _Evaluator(object):
    def __init__(self, rp, data_params, hw, models, rep_mode):
        self.interpreter = Interpreter(rp)
        self.rp = rp
        self.data_params = tuple(data_params)
        self.hw = hw
        self.models = models
        self.rep_mode = rep_mode

    def __call__(self, config):
        bindings = rp_bindings(self.rp, self.data_params, config, self.hw)
        try:
            result = self.interpreter.run(bindings, watch=('W_active', ))
        except DivisionByZero as e:
            log.warning('Treating %s as infeasible: %s', config, e.msg)
            return config, None
        if result.value == INFEASIBLE or 'W_active' not in result.watched:
            log.debug('%s is infeasible', config)
            return config, None

        case_tag = None
        if self.models is not None:
            try:
                case_tag = estimate_cycles(self.models, self.hw, self.data_params, config,
                                           self.rep_mode).case_tag
            except (ZeroOccupancy, DenominatorNearZero):
                pass
        occupancy = float(result.watched['W_active'] / as_rational(self.hw.W_max))
        log.debug('%s: Ec=%s occupancy=%.3f', config, float(result.value), occupancy)
        return config, RankedConfig(config, float(result.value), occupancy, case_tag)


def search_optimal(rp, data_params, hw, config_space, models=None, jobs=1, rep_mode='real',
                   tie_tolerance=DEFAULT_TIE_TOLERANCE):
    """Exhaustive search of the configuration minimizing the estimated cycles.

    ``rp`` is a cycles program (see :func:`.generate_rp`), configurations
    for which it returns the infeasible sentinel are discarded. Ties
    within ``tie_tolerance`` (relative) are broken by highest occupancy,
    then by the smallest ``(bx, by, bz)``. The other configurations
    follow the chosen one by increasing estimate. Evaluation runs on ``jobs``
    threads, the result does not depend on it.

    With ``models`` each configuration is tagged with the MWP-CWP case
    it falls in.
    """
    config_space = list(config_space)
    if not config_space:
        raise ValueError('empty configuration space')
    evaluate = _Evaluator(rp, data_params, hw, models, rep_mode)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(evaluate, config_space))
    else:
        outcomes = [evaluate(config) for config in config_space]

    feasible = [entry for _, entry in outcomes if entry is not None]
    infeasible = sorted(config for config, entry in outcomes if entry is None)
    if not feasible:
        raise NoFeasibleConfig('none of the %d configurations is feasible at %s'
                               % (len(config_space), tuple(data_params)))

    best = min(entry.cycles for entry in feasible)
    margin = tie_tolerance * abs(best)
    tied = [e for e in feasible if e.cycles - best <= margin]
    chosen = min(tied, key=lambda e: (-e.occupancy, e.config))
    rest = sorted((e for e in feasible if e is not chosen),
                  key=lambda e: (e.cycles, -e.occupancy, e.config))

    result = SearchResult(data_params, [chosen] + rest, len(tied) - 1, infeasible)
    log.info('Best configuration at %s: %s (%.6g cycles, %d ties, %d infeasible)',
             result.data_params, result.chosen, result.cycles, result.ties, len(infeasible))
    return result


def dump_search_jsonl(result):
    """One JSON object per configuration, ranked ones first."""
    lines = []
    for entry in result.ranked:
        lines.append(jsonify.encode({'config': str(entry.config), 'Ec': entry.cycles,
                                     'occupancy': entry.occupancy,
                                     'case_tag': entry.case_tag}))
    for config in result.infeasible:
        lines.append(jsonify.encode({'config': str(config), 'Ec': INFEASIBLE, 'occupancy': None,
                                     'case_tag': None}))
    return ''.join(line + '\n' for line in lines)
