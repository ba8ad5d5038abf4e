"""
Sequences raising a negative double-cycle from (0^n,0^m) to its most
expressive configuration
"""

from data_models.badc_models import BadcSpec
from data_models.network_models import Configuration
from helper_utilities.constants import CycleSide, NetworkKind
from sequences.base_sequence import BaseSequence, BIT
from sequences.runner import SequenceRunner
from sequences.sigma_sequence import (
    BOTH_ODD, ONE_ODD, SigmaASequence, SigmaBSequence, expected_case, sigma_forms
)

NEGATIVE_ONLY = frozenset({NetworkKind.NEGATIVE})


def alternating_left_ones_right(spec: BadcSpec) -> Configuration:
    """((10)^{n/2}, 1^m)"""
    left = tuple(1 if k % 2 == 0 else 0 for k in range(spec.n))
    return spec.from_words(left, (1,) * spec.m)


def run_comp1(runner: SequenceRunner, built: CycleSide = CycleSide.LEFT) -> None:
    for _ in range(1, runner.size(built)):
        runner.sync()
        runner.expand(built)
        runner.erase(built.other)


def run_comp2(runner: SequenceRunner, built: CycleSide = CycleSide.RIGHT) -> None:
    if all(runner.word(built)):
        runner.sync()
        runner.erase(built)
    runner.sync()
    runner.expand(built)
    for _ in range(1, runner.size(built) - 1):
        runner.shift(built.other)
        runner.sync()
        runner.expand(built)


def _rotate_left(runner: SequenceRunner) -> None:
    runner.shift(CycleSide.LEFT)
    runner.sync()


def run_odd_landing(runner: SequenceRunner) -> None:
    """
    Both cycles odd, after comp1: build the right cycle while the left one
    rotates under shift L; sync, then rotate the left cycle into place.

    With the right cycle's last automaton at 0 the hub follows the negated
    last left automaton, so the left cycle turns as a twisted ring of n - 1
    automata with a single stable automaton. Two rotations always toggle the
    hub, and 2(n - 1) rotations visit every member of the ring's orbit.
    """
    spec = runner.spec
    turn = 2 * (spec.n - 1)
    runner.sync()
    runner.expand(CycleSide.RIGHT)
    for round_ in range(1, spec.m - 1):
        wanted = (round_ + 1) % 2
        for _ in range(turn):
            if runner.hub == wanted:
                break
            _rotate_left(runner)
        if runner.hub != wanted:
            runner.uncertify(f"comp: the left cycle did not toggle the hub in round {round_}")
            return
        runner.expand(CycleSide.RIGHT)
    target = spec.word(sigma_forms(spec, BOTH_ODD)[0], CycleSide.LEFT)
    for _ in range(turn):
        if runner.word(CycleSide.LEFT) == target:
            return
        _rotate_left(runner)
    if runner.word(CycleSide.LEFT) != target:
        runner.uncertify("comp: the left cycle never reached its most expressive word")


class CompOneSequence(BaseSequence):
    """comp1: raise the left cycle's expressiveness, refreshing the right one each round"""

    allowed_kinds = NEGATIVE_ONLY

    def get_sequence_name(self) -> str:
        return "comp1"

    def apply(self, runner: SequenceRunner) -> None:
        spec = runner.spec
        if runner.current.value != 0 or spec.n % 2:
            runner.uncertify("comp1 is proven from (0^n,0^m) with an even left cycle")
        run_comp1(runner)


class CompTwoSequence(BaseSequence):
    """comp2: raise the right cycle's expressiveness while keeping the left one alternating"""

    allowed_kinds = NEGATIVE_ONLY

    def get_sequence_name(self) -> str:
        return "comp2"

    def apply(self, runner: SequenceRunner) -> None:
        spec = runner.spec
        if spec.n % 2 or spec.m % 2 or runner.current != alternating_left_ones_right(spec):
            runner.uncertify("comp2 is proven from ((10)^{n/2},1^m) with even cycles")
        run_comp2(runner)


class CompSequence(BaseSequence):
    """
    comp: comp1 then comp2.

    An even left cycle runs them unchanged. An odd left cycle beside an even
    right one runs them with the cycles exchanged. Two odd cycles run comp1,
    then build the right cycle with the left one as a rotating hub toggle.
    Every form ends on the source of the linking sequence when a cycle is odd.
    """

    allowed_kinds = NEGATIVE_ONLY

    def get_sequence_name(self) -> str:
        return "comp"

    def apply(self, runner: SequenceRunner) -> None:
        spec = runner.spec
        if runner.current.value != 0:
            runner.uncertify("comp is proven from (0^n,0^m)")
        if spec.n < 2 or spec.m < 2:
            runner.uncertify("comp needs both cycles of size >= 2")
        if spec.n % 2 == 0 or spec.n < 2 or spec.m < 2:
            run_comp1(runner)
            run_comp2(runner)
        elif spec.m % 2 == 0:
            runner.record_variant("comp: odd left cycle, comp1 and comp2 run with the cycles exchanged")
            run_comp1(runner, CycleSide.RIGHT)
            run_comp2(runner, CycleSide.LEFT)
        else:
            runner.record_variant("comp: both cycles odd, the right cycle is built under left rotations")
            run_comp1(runner)
            run_odd_landing(runner)


class CompBitSequence(BaseSequence):
    """
    comp_bit b: comp, followed for b = 1 by the sequence linking the two
    recurrent configurations of the double-cycle's parity case
    """

    allowed_kinds = NEGATIVE_ONLY
    argument_kinds = (BIT,)

    def get_sequence_name(self) -> str:
        return "comp_bit"

    def apply(self, runner: SequenceRunner, bit: int) -> None:
        CompSequence().apply(runner)
        if not bit:
            return
        case = expected_case(runner.spec)
        if case == ONE_ODD:
            SigmaASequence().apply(runner)
        elif case == BOTH_ODD:
            SigmaBSequence().apply(runner)
        else:
            runner.annotate("comp_bit 1: both cycles are even, no linking sequence applies")


def comp1_bound(n: int, m: int) -> int:
    return (n - 1) * (n + m - 2)


def comp2_bound(n: int, m: int) -> int:
    return (m - 2) * (n + m - 2) + (2 * m - 1)


def comp_bound(n: int, m: int) -> int:
    """Effective updates of comp from (0^n,0^m), for every parity of the cycles"""
    if n % 2 == 0:
        return (n + m) ** 2 - 5 * (n - 1) - 3 * m
    if m % 2 == 0:
        return comp_bound(m, n)
    rounds = (m - 2) * (2 * n + m - 2)
    return comp1_bound(n, m) + (m - 1) + rounds + n * (2 * n - 3)
