from .search_timeout_exception import SearchTimeoutException
from .unfixed_auxiliary_exception import UnfixedAuxiliaryException
