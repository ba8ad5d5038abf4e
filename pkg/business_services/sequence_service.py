"""
Sequence service: executes programs and named sequences on double-cycles
"""

import logging
from typing import Any, Sequence, Union

from data_models.badc_models import DoubleCycle
from data_models.network_models import Configuration
from data_models.program_models import (
    DecUp, Erase, Expand, IncUp, Instruction, Macro, Program, Shift, Sync, Trace, Update
)
from helper_utilities.constants import CycleSide
from helper_utilities.exceptions import LabError, UnknownMacroError
from sequences import SEQUENCES, SequenceRunner
from sequences.parser import parse_program

logger = logging.getLogger(__name__)


class SequenceService:
    """Service class for update-sequence execution"""

    @staticmethod
    def parse(text: str) -> Program:
        return parse_program(text)

    @staticmethod
    def apply_instruction(runner: SequenceRunner, instruction: Instruction) -> None:
        if isinstance(instruction, Sync):
            runner.sync()
        elif isinstance(instruction, Update):
            runner.update(instruction.cycle, instruction.index)
        elif isinstance(instruction, IncUp):
            runner.inc_up(instruction.cycle, instruction.first, instruction.last)
        elif isinstance(instruction, DecUp):
            runner.dec_up(instruction.cycle, instruction.first, instruction.last)
        elif isinstance(instruction, Erase):
            runner.erase(instruction.cycle)
        elif isinstance(instruction, Expand):
            runner.expand(instruction.cycle)
        elif isinstance(instruction, Shift):
            runner.shift(instruction.cycle)
        elif isinstance(instruction, Macro):
            sequence = SEQUENCES.get(instruction.name)
            if sequence is None:
                raise UnknownMacroError(instruction.name, 0, 0)
            sequence.run(runner, instruction.arguments)
        else:
            raise LabError(f"Unsupported instruction: {instruction!r}")

    @staticmethod
    def exec(dc: DoubleCycle, x: Configuration, program: Union[Program, str],
             strict: bool = False) -> Trace:
        """Run a program left to right from x; macros read the live configuration"""
        if isinstance(program, str):
            program = parse_program(program)
        runner = SequenceRunner(dc, x, strict=strict)
        for instruction in program:
            SequenceService.apply_instruction(runner, instruction)
        trace = runner.trace()
        logger.debug(
            f"Executed {len(program)} instruction(s): {trace.attempted_count} attempted, "
            f"{trace.effective_count} effective"
        )
        return trace

    @staticmethod
    def run_sequence(dc: DoubleCycle, x: Configuration, name: str,
                     arguments: Sequence[Any] = (), strict: bool = False) -> Trace:
        sequence = SEQUENCES.get(name)
        if sequence is None:
            raise LabError(f"Unknown sequence '{name}'")
        runner = SequenceRunner(dc, x, strict=strict)
        sequence.run(runner, arguments)
        return runner.trace()

    # Named sequences

    @staticmethod
    def copy_c(dc: DoubleCycle, x: Configuration, target: Configuration, cycle: CycleSide) -> Trace:
        return SequenceService.run_sequence(dc, x, 'copy_c', (cycle, target))

    @staticmethod
    def copy(dc: DoubleCycle, x: Configuration, target: Configuration) -> Trace:
        return SequenceService.run_sequence(dc, x, 'copy', (target,))

    @staticmethod
    def copy_p(dc: DoubleCycle, x: Configuration, target: Configuration) -> Trace:
        return SequenceService.run_sequence(dc, x, 'copy_p', (target,))

    @staticmethod
    def fix0(dc: DoubleCycle, x: Configuration) -> Trace:
        return SequenceService.run_sequence(dc, x, 'fix0')

    @staticmethod
    def fix1(dc: DoubleCycle, x: Configuration) -> Trace:
        return SequenceService.run_sequence(dc, x, 'fix1')

    @staticmethod
    def simp(dc: DoubleCycle, x: Configuration) -> Trace:
        return SequenceService.run_sequence(dc, x, 'simp')

    @staticmethod
    def comp1(dc: DoubleCycle, x: Configuration, strict: bool = False) -> Trace:
        return SequenceService.run_sequence(dc, x, 'comp1', strict=strict)

    @staticmethod
    def comp2(dc: DoubleCycle, x: Configuration, strict: bool = False) -> Trace:
        return SequenceService.run_sequence(dc, x, 'comp2', strict=strict)

    @staticmethod
    def comp(dc: DoubleCycle, x: Configuration, strict: bool = False) -> Trace:
        return SequenceService.run_sequence(dc, x, 'comp', strict=strict)

    @staticmethod
    def comp_bit(dc: DoubleCycle, x: Configuration, bit: int, strict: bool = False) -> Trace:
        return SequenceService.run_sequence(dc, x, 'comp_bit', (bit,), strict=strict)

    @staticmethod
    def sigma_a(dc: DoubleCycle, x: Configuration) -> Trace:
        return SequenceService.run_sequence(dc, x, 'sigma_a')

    @staticmethod
    def sigma_a_inv(dc: DoubleCycle, x: Configuration) -> Trace:
        return SequenceService.run_sequence(dc, x, 'sigma_a_inv')

    @staticmethod
    def sigma_b(dc: DoubleCycle, x: Configuration) -> Trace:
        return SequenceService.run_sequence(dc, x, 'sigma_b')

    @staticmethod
    def sigma_b_inv(dc: DoubleCycle, x: Configuration) -> Trace:
        return SequenceService.run_sequence(dc, x, 'sigma_b_inv')
