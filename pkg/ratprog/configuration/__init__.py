from .utils import RatProgConfigError, coerce_options, get_partial_dict
