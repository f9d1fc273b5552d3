from .invalid_gen_spec_exception import InvalidGenSpecException
