"""
Verification service: replays the update sequences and the closed-form
results on canonical double-cycles and compares them against the
brute-force transition graph
"""

import logging
import random
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from business_services.badc_service import BadcService
from business_services.dynamics_service import DynamicsService
from business_services.network_service import NetworkService
from business_services.sequence_service import SequenceService
from config import LabSettings
from data_models.badc_models import BadcSpec, DoubleCycle
from data_models.dynamics_models import ConvergenceReport, TransitionGraph
from data_models.network_models import Configuration, LocalFunction, NetworkSpec
from data_models.program_models import Trace
from data_models.report_models import VerificationCase, VerificationReport
from helper_utilities.constants import CycleSide, LabConstants, NetworkKind, Suite
from helper_utilities.exceptions import InvalidSizeError, LabError
from helper_utilities.formatters import ConfigurationFormatter
from sequences.comp_sequence import alternating_left_ones_right, comp1_bound, comp2_bound, comp_bound
from sequences.copy_sequence import copy_condition, copy_p_bound, copy_pair_bound, cycle_copy_bound
from sequences.fix_sequence import fix0_bound, fix1_bound
from sequences.sigma_sequence import BOTH_ODD, expected_case, sigma_forms
from sequences.simp_sequence import simp_bound

logger = logging.getLogger(__name__)

SizePair = Tuple[int, int]
PairCheck = Callable[[int, int, LabSettings], VerificationReport]


def alpha(k: int) -> int:
    """1 when k is even and positive, 0 otherwise"""
    return 1 if k > 0 and k % 2 == 0 else 0


def irreversible_count(n: int, m: int, sign: int = 1) -> int:
    """|I| for a negative double-cycle; sign=-1 gives the difference form"""
    return alpha(n - 1) * 2 ** (m - 1) + sign * alpha(m - 1) * 2 ** (n - 1)


def quadratic_bound(n: int, m: int) -> int:
    """Lower bound on the distance from (0^n,0^m) to the alternating configuration"""
    return (n - 1) * (n - 2) // 2 + (m - 1) * (m - 2) // 2 + 1


def printed_quadratic_bound(n: int, m: int) -> int:
    left, right = n // 2, m // 2
    return left * (left + 1) // 2 + right * (right + 1) // 2


def printed_copy_p_bound(n: int, m: int) -> int:
    return 3 * (n + m - 4) - 1


class VerificationService:
    """Service class for the verification suites"""

    # Shared plumbing

    @staticmethod
    def _pairs(n_values: Iterable[int], m_values: Iterable[int], minimum: int) -> List[SizePair]:
        pairs = sorted({(int(n), int(m)) for n in n_values for m in m_values})
        for n, m in pairs:
            if n < minimum or m < minimum:
                raise InvalidSizeError(f"Cycle sizes must be >= {minimum}, got n={n}, m={m}")
        return pairs

    @staticmethod
    def _run_pairs(check: PairCheck, pairs: Sequence[SizePair], settings: LabSettings) -> VerificationReport:
        """Run one check per size pair, concurrently when verify_workers > 1"""
        workers = max(1, min(settings.verify_workers, len(pairs) or 1))
        if workers == 1:
            reports = [check(n, m, settings) for n, m in pairs]
        else:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                reports = list(executor.map(lambda pair: check(pair[0], pair[1], settings), pairs))
        return VerificationReport.merge(reports)

    @staticmethod
    def _graph(network: NetworkSpec, settings: LabSettings) -> TransitionGraph:
        return DynamicsService.build_graph(network, settings.enumeration_cap, settings.graph_workers)

    @staticmethod
    def _starts(dc: DoubleCycle, settings: LabSettings,
                keep: Optional[Callable[[Configuration], bool]] = None) -> Tuple[List[int], bool]:
        """All configurations up to exhaustive_max automata, a seeded sample beyond"""
        state_count = 1 << dc.count
        exhaustive = dc.count <= settings.exhaustive_max
        if exhaustive:
            candidates: Iterable[int] = range(state_count)
        else:
            rng = random.Random(f"{settings.seed}:{dc.kind.value}:{dc.n}:{dc.m}")
            candidates = sorted(rng.sample(range(state_count), min(settings.sample_starts, state_count)))
        starts = [x for x in candidates if keep is None or keep(Configuration(x, dc.count))]
        return starts, exhaustive

    @staticmethod
    def _pair(value: int, dc: DoubleCycle) -> str:
        return ConfigurationFormatter.to_pair(value, dc.n, dc.m)

    @staticmethod
    def _case(suite: Suite, check: str, dc: DoubleCycle, measured: Dict, expected: Dict,
              passed: bool, notes: Sequence[str] = ()) -> VerificationCase:
        return VerificationCase(
            suite=suite.value, check=check, n=dc.n, m=dc.m, kind=dc.kind.value,
            measured=measured, expected=expected, passed=bool(passed), notes=tuple(notes),
        )

    @staticmethod
    def _landing_ok(trace: Trace, landing: Configuration, bound: int,
                    recurrent: np.ndarray, convergence: ConvergenceReport) -> bool:
        """A macro run reached `landing` within `bound`, agreeing with the graph"""
        return (
            trace.final == landing
            and trace.replay() == trace.final
            and trace.effective_count <= bound
            and bool(recurrent[trace.final.value])
            and convergence.time_of(trace.start.value) <= trace.effective_count
        )

    @staticmethod
    def _sweep(dc: DoubleCycle, name: str, starts: Sequence[int], landing: Configuration,
               bound_of: Callable[[Trace], int], recurrent: np.ndarray,
               convergence: ConvergenceReport) -> Dict:
        """Run a macro from every start and count the runs that miss"""
        failures = 0
        max_effective = 0
        first_failure = None
        for value in starts:
            x = Configuration(value, dc.count)
            try:
                trace = SequenceService.run_sequence(dc, x, name)
                ok = VerificationService._landing_ok(trace, landing, bound_of(trace), recurrent, convergence)
                max_effective = max(max_effective, trace.effective_count)
            except LabError as error:
                logger.warning(f"[WARNING] {name} failed from {VerificationService._pair(value, dc)}: {error}")
                ok = False
            if not ok:
                failures += 1
                if first_failure is None:
                    first_failure = VerificationService._pair(value, dc)
        return {
            "starts": len(starts),
            "failures": failures,
            "maxEffective": max_effective,
            "firstFailure": first_failure,
        }

    # Positive double-cycles

    @staticmethod
    def _has_one_in_both(dc: DoubleCycle, x: Configuration) -> bool:
        return x.bit(0) == 1 or (
            any(dc.spec.word(x, CycleSide.LEFT)[1:]) and any(dc.spec.word(x, CycleSide.RIGHT)[1:])
        )

    @staticmethod
    def _positive_pair(n: int, m: int, settings: LabSettings,
                       convergence_bound: Optional[Callable[[int, int], int]] = None) -> VerificationReport:
        dc = BadcService.build_double_cycle(NetworkKind.POSITIVE, n, m)
        g = VerificationService._graph(dc.network, settings)
        attractors = DynamicsService.attractors(g)
        recurrent = DynamicsService.recurrent_mask(g, attractors)
        convergence = DynamicsService.convergence(g, attractors)
        zeros, ones = Configuration.zeros(dc.count), Configuration.ones(dc.count)
        pair = VerificationService._pair
        case = VerificationService._case
        report = VerificationReport()

        report.add(case(
            Suite.POSITIVE, "attractors", dc,
            measured={"count": len(attractors), "members": [[pair(v, dc) for v in a.members[:2]] for a in attractors]},
            expected={"count": 2, "stable": [pair(zeros.value, dc), pair(ones.value, dc)]},
            passed=[a.members for a in attractors] == [(zeros.value,), (ones.value,)],
        ))

        bound = (convergence_bound or (lambda a, b: 2 * (a + b) - 5))(n, m)
        report.add(case(
            Suite.POSITIVE, "convergence-time", dc,
            measured={"networkTime": convergence.network_time},
            expected={"bound": bound},
            passed=convergence.network_time <= bound,
        ))

        starts, exhaustive = VerificationService._starts(dc, settings, lambda x: x != ones)
        measured = VerificationService._sweep(
            dc, "fix0", starts, zeros,
            lambda trace: fix0_bound(n, m, trace.variants[0] if trace.variants else "fix0: left"),
            recurrent, convergence,
        )
        measured["exhaustive"] = exhaustive
        report.add(case(
            Suite.POSITIVE, "fix0", dc, measured=measured,
            expected={"final": pair(zeros.value, dc), "boundLeft": fix0_bound(n, m),
                      "boundRight": fix0_bound(n, m, "fix0: right")},
            passed=measured["failures"] == 0 and measured["starts"] > 0,
        ))

        starts, exhaustive = VerificationService._starts(
            dc, settings, lambda x: VerificationService._has_one_in_both(dc, x)
        )
        measured = VerificationService._sweep(
            dc, "fix1", starts, ones, lambda trace: fix1_bound(n, m), recurrent, convergence
        )
        measured["exhaustive"] = exhaustive
        report.add(case(
            Suite.POSITIVE, "fix1", dc, measured=measured,
            expected={"final": pair(ones.value, dc), "bound": fix1_bound(n, m)},
            passed=measured["failures"] == 0 and measured["starts"] > 0,
        ))
        return report

    @staticmethod
    def verify_positive(n_values: Iterable[int], m_values: Iterable[int],
                        settings: Optional[LabSettings] = None,
                        convergence_bound: Optional[Callable[[int, int], int]] = None) -> VerificationReport:
        """
        Positive double-cycles: the two stable configurations are the only
        attractors, the network converges within 2(n+m)-5 and fix0/fix1 land on
        them within their bounds. `convergence_bound` replaces the bound for
        harness self-tests.
        """
        settings = settings or LabSettings()
        pairs = VerificationService._pairs(n_values, m_values, 2)
        report = VerificationService._run_pairs(
            lambda n, m, s: VerificationService._positive_pair(n, m, s, convergence_bound), pairs, settings
        )
        logger.info(f"Positive suite: {report.passed_count} passed, {report.failed_count} failed")
        return report

    # Mixed double-cycles

    @staticmethod
    def _mixed_pair(n: int, m: int, settings: LabSettings) -> VerificationReport:
        dc = BadcService.build_double_cycle(NetworkKind.MIXED, n, m)
        g = VerificationService._graph(dc.network, settings)
        attractors = DynamicsService.attractors(g)
        recurrent = DynamicsService.recurrent_mask(g, attractors)
        convergence = DynamicsService.convergence(g, attractors)
        zeros = Configuration.zeros(dc.count)
        bound = simp_bound(n, m)
        case = VerificationService._case
        report = VerificationReport()

        report.add(case(
            Suite.MIXED, "attractors", dc,
            measured={"count": len(attractors), "sizes": [a.size for a in attractors]},
            expected={"count": 1, "stable": [VerificationService._pair(0, dc)]},
            passed=[a.members for a in attractors] == [(0,)],
        ))
        report.add(case(
            Suite.MIXED, "convergence-time", dc,
            measured={"networkTime": convergence.network_time},
            expected={"bound": bound},
            passed=convergence.network_time <= bound,
        ))
        starts, exhaustive = VerificationService._starts(dc, settings)
        measured = VerificationService._sweep(
            dc, "simp", starts, zeros, lambda trace: bound, recurrent, convergence
        )
        measured["exhaustive"] = exhaustive
        report.add(case(
            Suite.MIXED, "simp", dc, measured=measured,
            expected={"final": VerificationService._pair(0, dc), "bound": bound},
            passed=measured["failures"] == 0,
        ))
        return report

    @staticmethod
    def verify_mixed(n_values: Iterable[int], m_values: Iterable[int],
                     settings: Optional[LabSettings] = None) -> VerificationReport:
        settings = settings or LabSettings()
        pairs = VerificationService._pairs(n_values, m_values, 2)
        report = VerificationService._run_pairs(VerificationService._mixed_pair, pairs, settings)
        logger.info(f"Mixed suite: {report.passed_count} passed, {report.failed_count} failed")
        return report

    # Negative double-cycles

    @staticmethod
    def predicted_irreversible(spec: BadcSpec) -> FrozenSet[int]:
        """
        The configurations a negative double-cycle can only ever leave.

        An odd cycle of size s > 1 contributes every configuration whose word
        on it is (10)^{(s-1)/2}1, whatever the other cycle holds. With both
        cycles odd, ((01)^a 0, (01)^b 0) is irreversible as well.
        """
        n, m = spec.n, spec.m
        result = set()
        if alpha(n - 1):
            left = (1, 0) * ((n - 1) // 2) + (1,)
            for rest in product((0, 1), repeat=m - 1):
                result.add(spec.from_words(left, (1,) + rest).value)
        if alpha(m - 1):
            right = (1, 0) * ((m - 1) // 2) + (1,)
            for rest in product((0, 1), repeat=n - 1):
                result.add(spec.from_words((1,) + rest, right).value)
        if alpha(n - 1) and alpha(m - 1):
            result.add(spec.from_words((0, 1) * ((n - 1) // 2) + (0,), (0, 1) * ((m - 1) // 2) + (0,)).value)
        return frozenset(result)

    @staticmethod
    def _negative_structure(dc: DoubleCycle, g: TransitionGraph, attractors, recurrent: np.ndarray,
                            report: VerificationReport) -> None:
        """Attractor count and size, transient set and irreversibility"""
        n, m = dc.n, dc.m
        case = VerificationService._case
        pair = VerificationService._pair
        state_count = g.state_count
        expected_size = state_count - irreversible_count(n, m, 1)
        difference_size = state_count - irreversible_count(n, m, -1)
        sizes = [a.size for a in attractors]

        report.add(case(
            Suite.NEGATIVE, "single-attractor", dc,
            measured={"count": len(attractors), "kinds": [a.kind.value for a in attractors]},
            expected={"count": 1},
            passed=len(attractors) == 1,
        ))

        notes = [
            f"difference form of |I| predicts size {difference_size}: "
            f"{'matches' if sizes == [difference_size] else 'does not match'} the enumeration"
        ]
        if min(n, m) == 1:
            notes.append("degenerate cycle of size 1: checked by enumeration only")
        report.add(case(
            Suite.NEGATIVE, "attractor-size", dc,
            measured={"sizes": sizes},
            expected={"size": expected_size, "irreversible": irreversible_count(n, m, 1)},
            passed=sizes == [expected_size],
            notes=notes,
        ))

        predicted = VerificationService.predicted_irreversible(dc.spec)
        transient = frozenset(np.flatnonzero(~recurrent).tolist())
        sample = LabConstants.ATTRACTOR_SAMPLE_MEMBERS
        report.add(case(
            Suite.NEGATIVE, "transient-set", dc,
            measured={
                "transientCount": len(transient),
                "unexpected": [pair(v, dc) for v in sorted(transient - predicted)[:sample]],
                "missing": [pair(v, dc) for v in sorted(predicted - transient)[:sample]],
            },
            expected={"transientCount": len(predicted)},
            passed=transient == predicted,
        ))

        irreversible = frozenset(np.flatnonzero(DynamicsService.irreversible_mask(g)).tolist())
        direct = [DynamicsService.irreversibility_check(g, v, recurrent) for v in sorted(predicted)[:sample]]
        report.add(case(
            Suite.NEGATIVE, "irreversible", dc,
            measured={"irreversibleCount": len(irreversible), "directChecks": len(direct)},
            expected={"irreversibleCount": len(predicted)},
            passed=irreversible == predicted and all(direct),
        ))

    @staticmethod
    def _negative_comp(dc: DoubleCycle, g: TransitionGraph, recurrent: np.ndarray,
                       convergence: ConvergenceReport, report: VerificationReport) -> None:
        n, m = dc.n, dc.m
        case = VerificationService._case
        pair = VerificationService._pair
        zeros = Configuration.zeros(dc.count)
        middle = alternating_left_ones_right(dc.spec)
        alternating = dc.spec.from_words(BadcService.alternating_word(n, 1), BadcService.alternating_word(m, 1))

        for name, start, landing, bound in (
            ("comp1", zeros, middle, comp1_bound(n, m)),
            ("comp2", middle, alternating, comp2_bound(n, m)),
            ("comp", zeros, alternating, comp_bound(n, m)),
        ):
            trace = SequenceService.run_sequence(dc, start, name)
            distance = DynamicsService.distance(g, start.value, landing.value)
            report.add(case(
                Suite.NEGATIVE, name, dc,
                measured={"final": pair(trace.final.value, dc), "effective": trace.effective_count,
                          "distance": distance, "certified": trace.certified},
                expected={"final": pair(landing.value, dc), "bound": bound},
                passed=(
                    trace.certified
                    and VerificationService._landing_ok(trace, landing, bound, recurrent, convergence)
                    and distance is not None and distance <= trace.effective_count
                ),
            ))

    @staticmethod
    def _negative_copy_p(dc: DoubleCycle, g: TransitionGraph, settings: LabSettings,
                         report: VerificationReport) -> None:
        n, m = dc.n, dc.m
        source = dc.spec.from_words(BadcService.alternating_word(n, 1), BadcService.alternating_word(m, 1))
        targets, exhaustive = VerificationService._starts(dc, settings)
        distances = DynamicsService.distances_from(g, source.value)
        bound = copy_p_bound(n, m)
        printed = printed_copy_p_bound(n, m)
        failures = 0
        max_effective = 0
        max_distance = 0
        for value in targets:
            target = Configuration(value, dc.count)
            trace = SequenceService.copy_p(dc, source, target)
            distance = int(distances[value])
            max_effective = max(max_effective, trace.effective_count)
            max_distance = max(max_distance, distance)
            if trace.final != target or trace.effective_count > bound or not 0 <= distance <= trace.effective_count:
                failures += 1
        report.add(VerificationService._case(
            Suite.NEGATIVE, "copy_p", dc,
            measured={"targets": len(targets), "failures": failures, "maxEffective": max_effective,
                      "maxDistance": max_distance, "exhaustive": exhaustive},
            expected={"bound": bound, "printedBound": printed},
            passed=failures == 0 and len(targets) > 0,
            notes=(
                f"printed bound {printed} {'held' if max_effective <= printed else 'was exceeded'} "
                f"by the sequence; shortest trajectories need at most {max_distance}",
            ),
        ))

    @staticmethod
    def _negative_sigma(dc: DoubleCycle, g: TransitionGraph, recurrent: np.ndarray,
                        report: VerificationReport) -> None:
        case_name = expected_case(dc.spec)
        source, image = sigma_forms(dc.spec, case_name)
        forward, inverse = ("sigma_b", "sigma_b_inv") if case_name == BOTH_ODD else ("sigma_a", "sigma_a_inv")
        pair = VerificationService._pair
        checks = []
        measured = {}
        for name, start, landing in ((forward, source, image), (inverse, image, source)):
            trace = SequenceService.run_sequence(dc, start, name)
            distance = DynamicsService.distance(g, start.value, landing.value)
            measured[name] = {"final": pair(trace.final.value, dc), "effective": trace.effective_count,
                              "distance": distance}
            checks.append(
                trace.final == landing and trace.certified
                and bool(recurrent[landing.value])
                and distance is not None and distance <= trace.effective_count
            )
        report.add(VerificationService._case(
            Suite.NEGATIVE, "sigma", dc, measured=measured,
            expected={"source": pair(source.value, dc), "image": pair(image.value, dc), "case": case_name},
            passed=all(checks),
        ))

    @staticmethod
    def _negative_odd_comp(dc: DoubleCycle, g: TransitionGraph, recurrent: np.ndarray,
                           convergence: ConvergenceReport, report: VerificationReport) -> None:
        """comp lands on the linking source and comp_bit 1 on its image"""
        n, m = dc.n, dc.m
        pair = VerificationService._pair
        zeros = Configuration.zeros(dc.count)
        source, image = sigma_forms(dc.spec, expected_case(dc.spec))
        bound = comp_bound(n, m)
        for name, arguments, landing, limit in (
            ("comp", (), source, bound),
            ("comp_bit", (0,), source, bound),
            ("comp_bit", (1,), image, bound + n + m + 1),
        ):
            trace = SequenceService.run_sequence(dc, zeros, name, arguments)
            distance = DynamicsService.distance(g, zeros.value, landing.value)
            label = name if not arguments else f"{name} {arguments[0]}"
            report.add(VerificationService._case(
                Suite.NEGATIVE, label, dc,
                measured={"final": pair(trace.final.value, dc), "effective": trace.effective_count,
                          "distance": distance, "certified": trace.certified},
                expected={"final": pair(landing.value, dc), "bound": limit},
                passed=(
                    trace.certified
                    and VerificationService._landing_ok(trace, landing, limit, recurrent, convergence)
                    and distance is not None and distance <= trace.effective_count
                ),
            ))

    @staticmethod
    def _negative_pair(n: int, m: int, settings: LabSettings) -> VerificationReport:
        dc = BadcService.build_double_cycle(NetworkKind.NEGATIVE, n, m)
        g = VerificationService._graph(dc.network, settings)
        attractors = DynamicsService.attractors(g)
        recurrent = DynamicsService.recurrent_mask(g, attractors)
        convergence = DynamicsService.convergence(g, attractors)
        report = VerificationReport()

        VerificationService._negative_structure(dc, g, attractors, recurrent, report)
        even = n % 2 == 0 and m % 2 == 0
        if even:
            report.add(VerificationService._case(
                Suite.NEGATIVE, "convergence-time", dc,
                measured={"networkTime": convergence.network_time},
                expected={"networkTime": 0},
                passed=convergence.network_time == 0,
            ))
        if n < 2 or m < 2:
            return report

        starts, exhaustive = VerificationService._starts(dc, settings)
        bound = simp_bound(n, m)
        measured = VerificationService._sweep(
            dc, "simp", starts, Configuration.zeros(dc.count), lambda trace: bound, recurrent, convergence
        )
        measured["exhaustive"] = exhaustive
        report.add(VerificationService._case(
            Suite.NEGATIVE, "simp", dc, measured=measured,
            expected={"final": VerificationService._pair(0, dc), "bound": bound},
            passed=measured["failures"] == 0,
        ))

        if even:
            VerificationService._negative_comp(dc, g, recurrent, convergence, report)
            VerificationService._negative_copy_p(dc, g, settings, report)
        else:
            VerificationService._negative_sigma(dc, g, recurrent, report)
            VerificationService._negative_odd_comp(dc, g, recurrent, convergence, report)
        return report

    @staticmethod
    def verify_negative(n_values: Iterable[int], m_values: Iterable[int],
                        settings: Optional[LabSettings] = None) -> VerificationReport:
        """
        Negative double-cycles: one attractor whose size accounts for exactly
        the predicted irreversible configurations, plus simp, the comp chain,
        copy_p and the linking sequences, each cross-checked on the graph.
        """
        settings = settings or LabSettings()
        pairs = VerificationService._pairs(n_values, m_values, 1)
        report = VerificationService._run_pairs(VerificationService._negative_pair, pairs, settings)
        logger.info(f"Negative suite: {report.passed_count} passed, {report.failed_count} failed")
        return report

    # Quadratic lower bound

    @staticmethod
    def verify_quadratic(sizes: Iterable[int], settings: Optional[LabSettings] = None) -> VerificationReport:
        """
        Exact distance from (0^n,0^n) to the alternating configuration of the
        negative double-cycle with n = m, against the quadratic lower bound,
        and superlinear growth between consecutive sizes.
        """
        settings = settings or LabSettings()
        values = sorted(set(int(size) for size in sizes))
        if not values or any(size < 2 or size % 2 for size in values):
            raise InvalidSizeError(f"Quadratic sizes must be even and >= 2, got {values}")

        report = VerificationReport()
        distances: Dict[int, Optional[int]] = {}
        for size in values:
            dc = BadcService.build_double_cycle(NetworkKind.NEGATIVE, size, size)
            g = VerificationService._graph(dc.network, settings)
            word = BadcService.alternating_word(size, 1)
            target = dc.spec.from_words(word, word)
            distance = DynamicsService.distance(g, 0, target.value)
            distances[size] = distance
            bound = quadratic_bound(size, size)
            printed = printed_quadratic_bound(size, size)
            report.add(VerificationService._case(
                Suite.QUADRATIC, "lower-bound", dc,
                measured={"distance": distance},
                expected={"bound": bound, "printedBound": printed},
                passed=distance is not None and distance >= bound,
                notes=(f"printed bound {printed} {'held' if (distance or 0) >= printed else 'does not hold'}",),
            ))
            logger.debug(f"Distance to the alternating configuration at n=m={size}: {distance}")

        for smaller, larger in zip(values, values[1:]):
            low, high = distances[smaller], distances[larger]
            dc = BadcService.build_double_cycle(NetworkKind.NEGATIVE, larger, larger)
            report.add(VerificationService._case(
                Suite.QUADRATIC, "superlinear-growth", dc,
                measured={"fromSize": smaller, "fromDistance": low, "distance": high},
                expected={"ratioAbove": f"{larger}/{smaller}"},
                passed=low is not None and high is not None and high * smaller > low * larger,
            ))
        return VerificationReport.merge([report])

    # Cycle theorems on random networks

    @staticmethod
    def random_network(rng: random.Random, size: int, acyclic: bool) -> NetworkSpec:
        """
        A simple network built from identity, negation, AND gates and constants.

        With `acyclic`, automaton i only reads automata below i, so automaton 0
        is a constant.
        """
        functions = []
        for i in range(size):
            pool = list(range(i)) if acyclic else list(range(size))
            choice = rng.randrange(4) if pool else 3
            if choice == 0:
                functions.append(LocalFunction.identity(rng.choice(pool)))
            elif choice == 1:
                functions.append(LocalFunction.negation(rng.choice(pool)))
            elif choice == 2:
                functions.append(LocalFunction.and_gate(
                    rng.choice(pool), rng.choice((1, -1)), rng.choice(pool), rng.choice((1, -1))
                ))
            else:
                functions.append(LocalFunction.constant_false(i))
        return NetworkSpec(tuple(functions))

    @staticmethod
    def verify_cycle_theorems(sample_count: int = LabConstants.DEFAULT_CYCLE_SAMPLES,
                              max_n: int = LabConstants.DEFAULT_CYCLE_MAX_N,
                              seed: int = LabConstants.DEFAULT_SEED,
                              settings: Optional[LabSettings] = None) -> VerificationReport:
        """
        Over seeded random simple networks: no cycle means a single stable
        configuration, two stable configurations need a positive cycle and a
        stable oscillation needs a negative cycle.
        """
        settings = settings or LabSettings()
        if not 1 <= max_n <= LabConstants.CYCLE_MAX_N_LIMIT:
            raise InvalidSizeError(f"max_n must be in 1..{LabConstants.CYCLE_MAX_N_LIMIT}, got {max_n}")
        rng = random.Random(seed)
        applicable = Counter()
        counterexamples = Counter()
        first: Dict[str, str] = {}

        for sample in range(sample_count):
            size = rng.randint(1, max_n)
            network = VerificationService.random_network(rng, size, acyclic=sample % 2 == 0)
            signs = NetworkService.cycle_signs(NetworkService.interaction_graph(network, settings.enumeration_cap))
            attractors = DynamicsService.attractors(VerificationService._graph(network, settings))
            stable = sum(1 for a in attractors if a.size == 1)
            oscillations = len(attractors) - stable

            findings = []
            if not signs:
                findings.append(("acyclic-unique-fixed-point", len(attractors) == 1 and stable == 1))
            if stable >= 2:
                findings.append(("multistable-needs-positive-cycle", 1 in signs))
            if oscillations >= 1:
                findings.append(("oscillation-needs-negative-cycle", -1 in signs))
            for check, holds in findings:
                applicable[check] += 1
                if not holds:
                    counterexamples[check] += 1
                    first.setdefault(check, "; ".join(f.describe() for f in network.functions))

        report = VerificationReport()
        for check in ("acyclic-unique-fixed-point", "multistable-needs-positive-cycle",
                      "oscillation-needs-negative-cycle"):
            report.add(VerificationCase(
                suite=Suite.CYCLE_THEOREMS.value, check=check, n=max_n, m=0, kind="random",
                measured={"networks": sample_count, "applicable": applicable[check],
                          "counterexamples": counterexamples[check], "firstCounterexample": first.get(check)},
                expected={"counterexamples": 0},
                passed=counterexamples[check] == 0,
            ))
        logger.info(f"Cycle checks over {sample_count} networks: {sum(counterexamples.values())} counterexample(s)")
        return VerificationReport.merge([report])

    # Cycle copies

    @staticmethod
    def copy_pairs(size: int, hub: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
        """Every (word, target) of one cycle with the given hub state meeting a copy condition"""
        words = [(hub,) + rest for rest in product((0, 1), repeat=size - 1)]
        return [(word, target) for word in words for target in words if copy_condition(word, target) is not None]

    @staticmethod
    def verify_copy(n: int = 4, m: int = 4, settings: Optional[LabSettings] = None,
                    kind: NetworkKind = NetworkKind.NEGATIVE) -> VerificationReport:
        """
        copy over every (start, target) pair meeting the copy conditions on
        both cycles; landings are also checked for reachability on the graph
        when it is small enough to sweep
        """
        settings = settings or LabSettings()
        if n < 2 or m < 2:
            raise InvalidSizeError(f"Cycle sizes must be >= 2, got n={n}, m={m}")
        dc = BadcService.build_double_cycle(kind, n, m)
        check_graph = dc.count <= settings.exhaustive_max
        g = VerificationService._graph(dc.network, settings) if check_graph else None
        bound, printed = copy_pair_bound(n, m)
        distance_cache: Dict[int, np.ndarray] = {}

        runs = failures = over_printed = max_effective = 0
        for hub in (0, 1):
            for left, left_target in VerificationService.copy_pairs(n, hub):
                for right, right_target in VerificationService.copy_pairs(m, hub):
                    x = dc.spec.from_words(left, right)
                    target = dc.spec.from_words(left_target, right_target)
                    trace = SequenceService.copy(dc, x, target)
                    runs += 1
                    max_effective = max(max_effective, trace.effective_count)
                    ok = trace.final == target and trace.effective_count <= bound
                    if ok and g is not None:
                        if x.value not in distance_cache:
                            distance_cache[x.value] = DynamicsService.distances_from(g, x.value)
                        distance = int(distance_cache[x.value][target.value])
                        ok = 0 <= distance <= trace.effective_count
                    failures += not ok
                    over_printed += trace.effective_count > printed

        report = VerificationReport()
        report.add(VerificationService._case(
            Suite.COPY, "copy", dc,
            measured={"pairs": runs, "failures": failures, "maxEffective": max_effective,
                      "graphChecked": check_graph},
            expected={"bound": bound, "perCycle": [cycle_copy_bound(n), cycle_copy_bound(m)],
                      "printedBound": printed},
            passed=failures == 0 and runs > 0,
            notes=(f"{over_printed} pair(s) exceed the printed bound {printed}",),
        ))
        return report

    # Canonicalization

    @staticmethod
    def verify_canonicalization(samples: int = LabConstants.DEFAULT_CANONICAL_SAMPLES, n: int = 3, m: int = 3,
                                seed: int = LabConstants.DEFAULT_SEED,
                                settings: Optional[LabSettings] = None) -> VerificationReport:
        """Relabelled transition graphs of random signings equal their canonical forms' graphs"""
        settings = settings or LabSettings()
        rng = random.Random(f"{seed}:canonical:{n}:{m}")
        failures = 0
        kinds = Counter()
        for _ in range(samples):
            left = tuple(rng.choice((1, -1)) for _ in range(n))
            right = tuple(rng.choice((1, -1)) for _ in range(m))
            spec = BadcSpec(n, m, None, left, right)
            canonical, relabeling = BadcService.canonicalize(spec)
            kinds[canonical.kind.value] += 1
            original = VerificationService._graph(BadcService.build_signed(spec), settings)
            target = VerificationService._graph(canonical.network, settings)
            mapped = {
                (relabeling.map_value(x), relabeling.map_value(y), relabeling.map_automaton(i))
                for x, y, i in original.edges()
            }
            if mapped != set(target.edges()):
                failures += 1
                logger.warning(f"[WARNING] Relabeling is not an isomorphism for signs {left} / {right}")

        report = VerificationReport()
        report.add(VerificationCase(
            suite=Suite.CANONICALIZATION.value, check="isomorphism", n=n, m=m, kind="signed",
            measured={"samples": samples, "failures": failures, "kinds": dict(sorted(kinds.items()))},
            expected={"failures": 0},
            passed=failures == 0,
        ))
        return report

    # Everything

    @staticmethod
    def verify_all(settings: Optional[LabSettings] = None, max_size: Optional[int] = None,
                   seed: Optional[int] = None) -> VerificationReport:
        """Every suite over all size pairs with at most `max_size` automata"""
        settings = settings or LabSettings()
        max_size = max_size or settings.sampled_max
        seed = settings.seed if seed is None else seed
        limit = max_size + 1

        def pairs(minimum: int) -> List[SizePair]:
            return [(n, m) for n in range(minimum, limit) for m in range(minimum, limit) if n + m - 1 <= max_size]

        reports = [
            VerificationService._run_pairs(VerificationService._positive_pair, pairs(2), settings),
            VerificationService._run_pairs(VerificationService._mixed_pair, pairs(2), settings),
            VerificationService._run_pairs(VerificationService._negative_pair, pairs(1), settings),
            VerificationService.verify_cycle_theorems(
                LabConstants.DEFAULT_CYCLE_SAMPLES, min(LabConstants.DEFAULT_CYCLE_MAX_N, max_size), seed, settings
            ),
            VerificationService.verify_canonicalization(LabConstants.DEFAULT_CANONICAL_SAMPLES, 3, 3, seed, settings),
        ]
        quadratic_sizes = [size for size in range(2, limit, 2) if 2 * size - 1 <= max_size]
        if quadratic_sizes:
            reports.append(VerificationService.verify_quadratic(quadratic_sizes, settings))
        if 7 <= max_size:
            reports.append(VerificationService.verify_copy(4, 4, settings))
        report = VerificationReport.merge(reports)
        logger.info(
            f"[SUCCESS] Full verification: {report.passed_count} passed" if report.all_passed
            else f"[ERROR] Full verification: {report.failed_count} of {len(report.cases)} failed"
        )
        return report

    @staticmethod
    def run_suite(suite: Suite, settings: Optional[LabSettings] = None, n_values: Sequence[int] = (),
                  m_values: Sequence[int] = (), sizes: Sequence[int] = (),
                  seed: Optional[int] = None, samples: Optional[int] = None,
                  max_n: Optional[int] = None) -> VerificationReport:
        """Dispatch one suite by name, with the defaults the CLI and API share"""
        settings = settings or LabSettings()
        seed = settings.seed if seed is None else seed
        default_sizes = list(range(2, 7))
        if suite is Suite.POSITIVE:
            return VerificationService.verify_positive(n_values or default_sizes, m_values or default_sizes, settings)
        if suite is Suite.MIXED:
            return VerificationService.verify_mixed(n_values or default_sizes, m_values or default_sizes, settings)
        if suite is Suite.NEGATIVE:
            return VerificationService.verify_negative(n_values or default_sizes, m_values or default_sizes,
                                                       settings)
        if suite is Suite.QUADRATIC:
            return VerificationService.verify_quadratic(sizes or (2, 4, 6), settings)
        if suite is Suite.CYCLE_THEOREMS:
            return VerificationService.verify_cycle_theorems(
                samples or LabConstants.DEFAULT_CYCLE_SAMPLES,
                max_n or LabConstants.DEFAULT_CYCLE_MAX_N, seed, settings,
            )
        if suite is Suite.COPY:
            return VerificationService.verify_copy(n_values[0] if n_values else 4,
                                                   m_values[0] if m_values else 4, settings)
        if suite is Suite.CANONICALIZATION:
            return VerificationService.verify_canonicalization(
                samples or LabConstants.DEFAULT_CANONICAL_SAMPLES,
                n_values[0] if n_values else 3, m_values[0] if m_values else 3, seed, settings,
            )
        raise LabError(f"Unknown suite: {suite!r}")
