from .gen_spec import Family, GenSpec, Variant
from .knapsack import gen_knapsack
from .investment import gen_investment
from .production import gen_production
from .random_model import gen_random
from .generator import generate
from .exceptions import InvalidGenSpecException
