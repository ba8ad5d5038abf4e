"""
Parser for update-sequence programs

One instruction per line or per ';'-separated statement, '#' starts a
comment. Elementary instructions:

    sync
    update <L|R> <k>
    incUp <L|R> <i> <j>
    decUp <L|R> <i> <j>
    erase <L|R> | expand <L|R> | shift <L|R>

Any registered sequence name is a macro call, e.g. ``copy (0110,0011)``,
``copy_c L (0110,0011)``, ``comp_bit 1``.
"""

import re
from typing import List, Tuple

from data_models.program_models import DecUp, Erase, Expand, IncUp, Instruction, Macro, Program, Shift, Sync, Update
from helper_utilities.constants import ELEMENTARY_INSTRUCTIONS, CycleSide
from helper_utilities.exceptions import ProgramSyntaxError, UnknownMacroError
from sequences import SEQUENCES

TOKEN = re.compile(r'\S+')

# Keywords are case-insensitive
ELEMENTARY = {name.lower(): name for name in ELEMENTARY_INSTRUCTIONS}

# Number of operands after the cycle, per elementary instruction
INDEX_OPERANDS = {'update': 1, 'incUp': 2, 'decUp': 2, 'erase': 0, 'expand': 0, 'shift': 0}

Token = Tuple[str, int]


def _statements(text: str) -> List[Tuple[int, List[Token]]]:
    """(line number, [(token, column)]) for every non-empty statement"""
    statements = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        code = line.split('#', 1)[0]
        start = 0
        for chunk in code.split(';'):
            tokens = [(match.group(0), start + match.start() + 1) for match in TOKEN.finditer(chunk)]
            if tokens:
                statements.append((line_number, tokens))
            start += len(chunk) + 1
    return statements


def _cycle(token: Token, line: int) -> CycleSide:
    text, column = token
    if text not in ('L', 'R'):
        raise ProgramSyntaxError(f"expected cycle L or R, got '{text}'", line, column)
    return CycleSide(text)


def _index(token: Token, line: int) -> int:
    text, column = token
    if not text.isdigit():
        raise ProgramSyntaxError(f"expected a cycle position, got '{text}'", line, column)
    value = int(text)
    if value < 1:
        raise ProgramSyntaxError("position 0 is the hub; only sync updates it", line, column)
    return value


def _elementary(name: str, tokens: List[Token], line: int, end_column: int) -> Instruction:
    if name == 'sync':
        if len(tokens) > 1:
            raise ProgramSyntaxError("sync takes no operands", line, tokens[1][1])
        return Sync()
    expected = 2 + INDEX_OPERANDS[name]
    if len(tokens) < expected:
        raise ProgramSyntaxError(f"{name} expects {expected - 1} operand(s)", line, end_column)
    if len(tokens) > expected:
        raise ProgramSyntaxError(f"unexpected operand '{tokens[expected][0]}'", line, tokens[expected][1])
    side = _cycle(tokens[1], line)
    if name == 'update':
        return Update(side, _index(tokens[2], line))
    if name == 'incUp':
        return IncUp(side, _index(tokens[2], line), _index(tokens[3], line))
    if name == 'decUp':
        return DecUp(side, _index(tokens[2], line), _index(tokens[3], line))
    return {'erase': Erase, 'expand': Expand, 'shift': Shift}[name](side)


def parse_program(text: str) -> Program:
    """Parse program text; raises ProgramSyntaxError / UnknownMacroError"""
    instructions: List[Instruction] = []
    for line, tokens in _statements(text or ''):
        head, column = tokens[0]
        end_column = tokens[-1][1] + len(tokens[-1][0])
        elementary = ELEMENTARY.get(head.lower())
        if elementary is not None:
            instructions.append(_elementary(elementary, tokens, line, end_column))
            continue
        sequence = SEQUENCES.get(head)
        if sequence is None:
            raise UnknownMacroError(head, line, column)
        arguments = tuple(token for token, _ in tokens[1:])
        problem = sequence.check_argument_text(arguments)
        if problem is not None:
            position, message = problem
            bad_column = tokens[position + 1][1] if position + 1 < len(tokens) else end_column
            raise ProgramSyntaxError(message, line, bad_column)
        instructions.append(Macro(head, arguments))
    return Program(tuple(instructions))
