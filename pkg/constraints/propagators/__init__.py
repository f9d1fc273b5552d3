"""Propagators:
One propagator per normalized constraint. Each one filters the domains of its scope to its own fixpoint in one call and
returns the variables it changed; the engine reschedules the propagators watching those variables
"""
from .propagator import Propagator
from .linear_propagator import LinearEqualPropagator, LinearLessEqualPropagator, NotEqualPropagator
from .table_propagator import TablePropagator
