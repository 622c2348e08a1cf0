"""Compile time step: splice fitted metric functions into a model template."""
import logging

from ..perfmodel.device import MODEL_METRICS
from ..perfmodel.emit import emit_mwpcwp_rp, emit_occupancy_rp

log = logging.getLogger(__name__)

MWPCWP_TEMPLATE = 'mwpcwp'
OCCUPANCY_TEMPLATE = 'occupancy'
TEMPLATES = (MWPCWP_TEMPLATE, OCCUPANCY_TEMPLATE)


def generate_rp(models, hw=None, rep_mode='real', template=MWPCWP_TEMPLATE, bake_hardware=True):
    """Rational program estimating the clock cycles of the modeled kernel.

    The metric functions of ``models`` are inlined into the MWP-CWP
    template. With ``bake_hardware`` the fields of ``hw`` become
    literals, otherwise they stay inputs of the program.

    The ``occupancy`` template does not depend on the kernel, it is the
    active warps program of :func:`.emit_occupancy_rp`.
    """
    if template == OCCUPANCY_TEMPLATE:
        return emit_occupancy_rp()
    elif template != MWPCWP_TEMPLATE:
        raise ValueError('template must be one of %s, not %r' % (', '.join(TEMPLATES), template))
    if bake_hardware and hw is None:
        raise ValueError('a device profile is required to bake hardware parameters')

    models.ensure_complete()
    functions = dict((metric, f) for metric, f in models.functions().items()
                     if metric in MODEL_METRICS and metric not in models.constants)
    program = emit_mwpcwp_rp(functions, models.constants, hw if bake_hardware else None,
                             rep_mode, variables=models.variables)
    log.info('Generated rational program over %s with %d instructions',
             ', '.join(program.inputs), len(program))
    return program
