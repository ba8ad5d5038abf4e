"""
Models package for the double-cycle laboratory
Value types for networks, double-cycles, dynamics, programs and reports,
plus the persisted verification-run record
"""

from .base_models import BaseModel, TimestampMixin, db
from .network_models import Configuration, LocalFunction, NetworkSpec, SignedArc
from .badc_models import BadcSpec, DoubleCycle, Relabeling
from .dynamics_models import Attractor, ConvergenceReport, TransitionGraph
from .program_models import (
    DecUp, Erase, Expand, IncUp, Instruction, Macro, Program, Shift, Sync,
    Trace, TraceBuilder, Update, UpdateRecord
)
from .report_models import VerificationCase, VerificationReport
from .run_models import VerificationRun

__all__ = [
    'db',
    'BaseModel',
    'TimestampMixin',
    'Configuration',
    'LocalFunction',
    'NetworkSpec',
    'SignedArc',
    'BadcSpec',
    'DoubleCycle',
    'Relabeling',
    'Attractor',
    'ConvergenceReport',
    'TransitionGraph',
    'Instruction',
    'Sync',
    'Update',
    'IncUp',
    'DecUp',
    'Erase',
    'Expand',
    'Shift',
    'Macro',
    'Program',
    'Trace',
    'TraceBuilder',
    'UpdateRecord',
    'VerificationCase',
    'VerificationReport',
    'VerificationRun'
]
