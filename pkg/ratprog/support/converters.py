# (c) 2005 Ian Bicking and contributors; written for Paste (http://pythonpaste.org)
# Licensed under the MIT license: http://www.opensource.org/licenses/mit-license.php
#
# Adapted to RatProg options


def asint(obj):
    if isinstance(obj, bool):
        raise ValueError("Bad integer value: %r" % obj)
    try:
        return int(obj)
    except (TypeError, ValueError):
        raise ValueError("Bad integer value: %r" % obj)


def asfloat(obj):
    if isinstance(obj, bool):
        raise ValueError("Bad real value: %r" % obj)
    try:
        return float(obj)
    except (TypeError, ValueError):
        raise ValueError("Bad real value: %r" % obj)


def aschoice(*choices):
    """Builds a converter accepting only one of ``choices``::

        conf.update(coerce_options(conf, {'search.rep_mode': aschoice('real', 'ceil')}))
    """
    def _converter(obj):
        value = str(obj).strip().lower()
        if value not in choices:
            raise ValueError("%r is not one of %s" % (obj, ', '.join(choices)))
        return value
    _converter.__name__ = 'aschoice_%s' % '_'.join(choices)
    return _converter
