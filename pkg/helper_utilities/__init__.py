"""
Utilities package for the double-cycle laboratory
Contains validators, formatters, constants and the exception hierarchy
"""

from .validators import *
from .formatters import *
from .constants import *
from .exceptions import *

__all__ = [
    # Validators
    'Validator',
    'ConfigurationTextValidator',
    'SignWordValidator',
    'SizeValidator',

    # Formatters
    'DataFormatter',
    'ConfigurationFormatter',
    'TraceFormatter',
    'ReportFormatter',
    'GraphFormatter',
    'SignFormatter',

    # Constants
    'NetworkKind',
    'FunctionKind',
    'AttractorKind',
    'CycleSide',
    'OutputFormat',
    'Suite',
    'LabConstants',
    'ExitCode',
    'ELEMENTARY_INSTRUCTIONS',

    # Exceptions
    'LabError',
    'InvalidSizeError',
    'AutomatonIndexError',
    'StateSpaceTooLargeError',
    'NonSimpleNetworkError',
    'ConfigurationSyntaxError',
    'ProgramSyntaxError',
    'UnknownMacroError',
    'PreconditionError',
    'NetworkKindError',
    'UndefinedKappaError'
]
