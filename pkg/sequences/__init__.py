"""
Sequences package for the double-cycle laboratory
Contains the instruction runner, the named sequences (macros) and the
program parser
"""

from typing import Dict

from .base_sequence import BaseSequence
from .runner import SequenceRunner
from .copy_sequence import CopyCondition, CopyCycleSequence, CopyFromAlternatingSequence, CopySequence
from .fix_sequence import FixOneSequence, FixZeroSequence
from .simp_sequence import SimpSequence
from .comp_sequence import CompBitSequence, CompOneSequence, CompSequence, CompTwoSequence
from .sigma_sequence import SigmaAInverseSequence, SigmaASequence, SigmaBInverseSequence, SigmaBSequence

SEQUENCE_CLASSES = (
    CopyCycleSequence,
    CopySequence,
    CopyFromAlternatingSequence,
    FixZeroSequence,
    FixOneSequence,
    SimpSequence,
    CompOneSequence,
    CompTwoSequence,
    CompSequence,
    CompBitSequence,
    SigmaASequence,
    SigmaAInverseSequence,
    SigmaBSequence,
    SigmaBInverseSequence,
)

SEQUENCES: Dict[str, BaseSequence] = {cls().name: cls() for cls in SEQUENCE_CLASSES}


def get_sequence(name: str) -> BaseSequence:
    """Look up a named sequence, KeyError if unknown"""
    return SEQUENCES[name]


__all__ = [
    'BaseSequence',
    'SequenceRunner',
    'CopyCondition',
    'SEQUENCES',
    'SEQUENCE_CLASSES',
    'get_sequence',
    'CopyCycleSequence',
    'CopySequence',
    'CopyFromAlternatingSequence',
    'FixZeroSequence',
    'FixOneSequence',
    'SimpSequence',
    'CompOneSequence',
    'CompTwoSequence',
    'CompSequence',
    'CompBitSequence',
    'SigmaASequence',
    'SigmaAInverseSequence',
    'SigmaBSequence',
    'SigmaBInverseSequence'
]
