from .context import ContextBuilder, ContextKey, context_key
from .cache import Cache, cache_report
from .compiler import Compiler, compile_aodd
