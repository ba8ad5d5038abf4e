"""
Services package for the double-cycle laboratory
Contains the network, double-cycle, dynamics, sequence, verification and
report services
"""

from .network_service import NetworkService
from .badc_service import BadcService
from .dynamics_service import DynamicsService
from .sequence_service import SequenceService
from .verification_service import VerificationService
from .report_service import ReportService

__all__ = [
    'NetworkService',
    'BadcService',
    'DynamicsService',
    'SequenceService',
    'VerificationService',
    'ReportService'
]
