"""
Short sequences linking pairs of recurrent configurations of negative
double-cycles with odd cycles
"""

from typing import Tuple

from data_models.badc_models import BadcSpec
from data_models.network_models import Configuration
from helper_utilities.constants import CycleSide, NetworkKind
from helper_utilities.exceptions import PreconditionError
from sequences.base_sequence import BaseSequence
from sequences.runner import SequenceRunner

ONE_ODD = "one-odd"
BOTH_ODD = "both-odd"


def _repeat(unit: Tuple[int, int], times: int, tail: Tuple[int, ...] = ()) -> Tuple[int, ...]:
    return unit * times + tail


def odd_side(spec: BadcSpec) -> CycleSide:
    """The odd cycle when exactly one cycle is odd (the left one otherwise)"""
    if spec.n % 2 == 0 and spec.m % 2 == 1:
        return CycleSide.RIGHT
    return CycleSide.LEFT


def sigma_forms(spec: BadcSpec, case: str) -> Tuple[Configuration, Configuration]:
    """
    (source, image) configurations linked by the forward sequence of `case`.

    ONE_ODD: the odd cycle reads (01)^k 0 -> (10)^k 0, the even one
    (01)^k -> (10)^k. BOTH_ODD: ((01)^a 1, (01)^b 0) -> ((10)^a 0, (10)^b 0).
    """
    n, m = spec.n, spec.m
    if case == BOTH_ODD:
        source = (_repeat((0, 1), (n - 1) // 2, (1,)), _repeat((0, 1), (m - 1) // 2, (0,)))
        image = (_repeat((1, 0), (n - 1) // 2, (0,)), _repeat((1, 0), (m - 1) // 2, (0,)))
        return spec.from_words(*source), spec.from_words(*image)

    def words(unit: Tuple[int, int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        left = _repeat(unit, (n - 1) // 2, (0,)) if n % 2 else _repeat(unit, n // 2)
        right = _repeat(unit, (m - 1) // 2, (0,)) if m % 2 else _repeat(unit, m // 2)
        return left, right

    return spec.from_words(*words((0, 1))), spec.from_words(*words((1, 0)))


def expected_case(spec: BadcSpec) -> str:
    if spec.n % 2 == 1 and spec.m % 2 == 1:
        return BOTH_ODD
    if spec.n % 2 == 1 or spec.m % 2 == 1:
        return ONE_ODD
    return ""


class _SigmaSequence(BaseSequence):
    allowed_kinds = frozenset({NetworkKind.NEGATIVE})
    case = ONE_ODD
    inverse = False

    def check_form(self, runner: SequenceRunner) -> None:
        spec = runner.spec
        if spec.n < 2 or spec.m < 2:
            raise PreconditionError(f"{self.name} needs both cycles of size >= 2", property_name="sizes")
        if expected_case(spec) != self.case:
            runner.uncertify(f"{self.name}: cycle sizes n={spec.n}, m={spec.m} do not match its case")
            return
        source, image = sigma_forms(spec, self.case)
        expected = image if self.inverse else source
        if runner.current != expected:
            runner.uncertify(f"{self.name}: start is not the configuration the sequence is proven for")


class SigmaASequence(_SigmaSequence):
    """shift L; shift R; update the odd cycle's last automaton; sync"""

    def get_sequence_name(self) -> str:
        return "sigma_a"

    def apply(self, runner: SequenceRunner) -> None:
        self.check_form(runner)
        odd = odd_side(runner.spec)
        if odd is CycleSide.RIGHT:
            runner.record_variant("sigma_a: mirrored onto the right cycle")
        runner.shift(odd)
        runner.shift(odd.other)
        runner.update(odd, runner.size(odd) - 1)
        runner.sync()


class SigmaAInverseSequence(_SigmaSequence):
    """shift L; shift R; sync"""

    inverse = True

    def get_sequence_name(self) -> str:
        return "sigma_a_inv"

    def apply(self, runner: SequenceRunner) -> None:
        self.check_form(runner)
        odd = odd_side(runner.spec)
        if odd is CycleSide.RIGHT:
            runner.record_variant("sigma_a_inv: mirrored onto the right cycle")
        runner.shift(odd)
        runner.shift(odd.other)
        runner.sync()


class SigmaBSequence(_SigmaSequence):
    """shift L; shift R; update both last automata; sync"""

    case = BOTH_ODD

    def get_sequence_name(self) -> str:
        return "sigma_b"

    def apply(self, runner: SequenceRunner) -> None:
        self.check_form(runner)
        runner.shift(CycleSide.LEFT)
        runner.shift(CycleSide.RIGHT)
        runner.update(CycleSide.LEFT, runner.size(CycleSide.LEFT) - 1)
        runner.update(CycleSide.RIGHT, runner.size(CycleSide.RIGHT) - 1)
        runner.sync()


class SigmaBInverseSequence(_SigmaSequence):
    """shift L; shift R; update the left cycle's last automaton; sync"""

    case = BOTH_ODD
    inverse = True

    def get_sequence_name(self) -> str:
        return "sigma_b_inv"

    def apply(self, runner: SequenceRunner) -> None:
        self.check_form(runner)
        runner.shift(CycleSide.LEFT)
        runner.shift(CycleSide.RIGHT)
        runner.update(CycleSide.LEFT, runner.size(CycleSide.LEFT) - 1)
        runner.sync()
