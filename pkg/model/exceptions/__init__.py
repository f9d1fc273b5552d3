from .model_format_exception import ModelFormatException
from .invalid_model_exception import InvalidModelException
