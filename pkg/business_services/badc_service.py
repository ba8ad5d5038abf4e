"""
Double-cycle service: canonical construction, classification,
canonicalization and expressiveness
"""

import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

from data_models.badc_models import BadcSpec, DoubleCycle, Relabeling, sign_product
from data_models.network_models import Configuration, LocalFunction, NetworkSpec
from helper_utilities.constants import CycleSide, NetworkKind
from helper_utilities.exceptions import ConfigurationSyntaxError, InvalidSizeError, LabError
from helper_utilities.formatters import ConfigurationFormatter, SignFormatter
from helper_utilities.validators import ConfigurationTextValidator, SignWordValidator

logger = logging.getLogger(__name__)

# Hub input polarities (left, right) of the canonical forms
CANONICAL_POLARITIES = {
    NetworkKind.POSITIVE: (1, 1),
    NetworkKind.MIXED: (-1, 1),
    NetworkKind.NEGATIVE: (-1, -1),
}


class BadcService:
    """Service class for Boolean automata double-cycles"""

    @staticmethod
    def parse_kind(value) -> NetworkKind:
        if isinstance(value, NetworkKind):
            return value
        try:
            return NetworkKind((value or '').strip().lower())
        except ValueError:
            raise LabError(f"Unknown double-cycle kind: {value!r}")

    @staticmethod
    def _build(spec: BadcSpec, left_signs: Sequence[int], right_signs: Sequence[int],
               hub_polarities: Tuple[int, int]) -> NetworkSpec:
        functions: List[Optional[LocalFunction]] = [None] * spec.count
        for side, signs in ((CycleSide.LEFT, left_signs), (CycleSide.RIGHT, right_signs)):
            indices = spec.cycle_indices(side)
            for position in range(1, len(indices)):
                functions[indices[position]] = LocalFunction.from_sign(indices[position - 1], signs[position - 1])
        left_last = spec.left_index(spec.n - 1)
        right_last = spec.right_index(spec.m - 1)
        functions[0] = LocalFunction.and_gate(left_last, hub_polarities[0], right_last, hub_polarities[1])
        return NetworkSpec(tuple(functions))

    @staticmethod
    def build_canonical(kind, n: int, m: int) -> NetworkSpec:
        """
        Canonical double-cycle: Identity along both cycles and an AND hub whose
        input polarities encode the kind. A size-1 cycle makes the hub read
        itself on that side.
        """
        kind = BadcService.parse_kind(kind)
        if n < 1 or m < 1:
            raise InvalidSizeError(f"Cycle sizes must be >= 1, got n={n}, m={m}")
        spec = BadcSpec(n, m, kind)
        ones = [1] * max(n, m)
        return BadcService._build(spec, ones, ones, CANONICAL_POLARITIES[kind])

    @staticmethod
    def build_double_cycle(kind, n: int, m: int) -> DoubleCycle:
        kind = BadcService.parse_kind(kind)
        network = BadcService.build_canonical(kind, n, m)
        logger.debug(f"Built canonical {kind.value} double-cycle n={n} m={m}")
        return DoubleCycle(BadcSpec(n, m, kind), network)

    @staticmethod
    def build_signed(spec: BadcSpec) -> NetworkSpec:
        """Network with the explicit arc signs of `spec`"""
        if not spec.has_signs:
            raise LabError("build_signed needs explicit arc signs")
        return BadcService._build(
            spec, spec.left_signs, spec.right_signs, (spec.left_signs[-1], spec.right_signs[-1])
        )

    @staticmethod
    def classify(spec: BadcSpec) -> NetworkKind:
        if not spec.has_signs:
            raise LabError("classify needs explicit arc signs")
        return spec.signed_kind()

    @staticmethod
    def _cycle_flips(signs: Sequence[int]) -> List[bool]:
        """Flip of each position: parity of the negative arcs from the hub up to it"""
        flips = [False]
        for sign in signs[:-1]:
            flips.append(flips[-1] ^ (sign < 0))
        return flips

    @staticmethod
    def canonicalize(spec: BadcSpec) -> Tuple[DoubleCycle, Relabeling]:
        """
        Canonical double-cycle of the same kind and the relabeling mapping the
        signed network's transition graph onto it.

        Negations along a cycle are absorbed into state flips; what remains is
        the cycle's sign product, carried by the hub polarity. A mixed
        double-cycle whose negative cycle is the right one is mapped onto the
        canonical mixed form with the two cycles exchanged.
        """
        kind = BadcService.classify(spec)
        left_flips = BadcService._cycle_flips(spec.left_signs)
        right_flips = BadcService._cycle_flips(spec.right_signs)

        flips = [False] * spec.count
        for position in range(1, spec.n):
            flips[spec.left_index(position)] = left_flips[position]
        for position in range(1, spec.m):
            flips[spec.right_index(position)] = right_flips[position]

        swapped = kind is NetworkKind.MIXED and sign_product(spec.left_signs) > 0
        if swapped:
            canonical_spec = BadcSpec(spec.m, spec.n, kind)
            permutation = [0] * spec.count
            for position in range(1, spec.m):
                permutation[spec.right_index(position)] = canonical_spec.left_index(position)
            for position in range(1, spec.n):
                permutation[spec.left_index(position)] = canonical_spec.right_index(position)
        else:
            canonical_spec = BadcSpec(spec.n, spec.m, kind)
            permutation = list(range(spec.count))

        relabeling = Relabeling(tuple(flips), tuple(permutation), swapped)
        network = BadcService.build_canonical(kind, canonical_spec.n, canonical_spec.m)
        logger.debug(
            f"Canonicalized {kind.value} double-cycle n={spec.n} m={spec.m} "
            f"(swapped={swapped}, flips={sum(flips)})"
        )
        return DoubleCycle(canonical_spec, network), relabeling

    @staticmethod
    def expressiveness_cycle(word: Sequence[int]) -> int:
        """Cyclic count of 01 patterns"""
        if not word:
            raise LabError("Expressiveness of an empty word is undefined")
        size = len(word)
        return sum(1 for i in range(size) if not word[i] and word[(i + 1) % size])

    @staticmethod
    def expressiveness(x: Configuration, spec: BadcSpec) -> int:
        if x.size != spec.count:
            raise LabError(f"Configuration of size {x.size} does not fit n={spec.n}, m={spec.m}")
        return (BadcService.expressiveness_cycle(spec.word(x, CycleSide.LEFT))
                + BadcService.expressiveness_cycle(spec.word(x, CycleSide.RIGHT)))

    @staticmethod
    def parse_configuration(text: str, spec: BadcSpec) -> Configuration:
        """Parse pair notation "(wl,wr)" for the shape of `spec`"""
        left, right = ConfigurationTextValidator(spec.n, spec.m).parse(text)
        return spec.from_words(left, right)

    @staticmethod
    def format_configuration(x: Configuration, spec: BadcSpec) -> str:
        if x.size != spec.count:
            raise ConfigurationSyntaxError(f"Configuration of size {x.size} does not fit n={spec.n}, m={spec.m}")
        return ConfigurationFormatter.to_pair(x.value, spec.n, spec.m)

    @staticmethod
    def alternating_word(size: int, first: int) -> Tuple[int, ...]:
        """first, not first, first, ... of the given length"""
        return tuple(first if k % 2 == 0 else 1 - first for k in range(size))

    @staticmethod
    def constant_configuration(spec: BadcSpec, state: int) -> Configuration:
        return Configuration.ones(spec.count) if state else Configuration.zeros(spec.count)

    @staticmethod
    def signed_spec(left_signs: str, right_signs: str) -> BadcSpec:
        """Shape from two sign words such as '+-+' and '++'; sizes are the word lengths"""
        left = SignWordValidator().parse((left_signs or '').strip())
        right = SignWordValidator().parse((right_signs or '').strip())
        return BadcSpec(len(left), len(right), None, left, right)

    @staticmethod
    def parse_sign_spec(text: str) -> BadcSpec:
        """
        Sign file: the left cycle's word then the right cycle's word,
        separated by whitespace or newlines; '#' starts a comment.
        """
        words = [
            token
            for line in (text or '').splitlines()
            for token in line.split('#', 1)[0].split()
        ]
        if len(words) != 2:
            raise LabError(f"A sign file holds exactly two sign words, found {len(words)}")
        return BadcService.signed_spec(words[0], words[1])

    @staticmethod
    def canonical_summary(spec: BadcSpec) -> Dict[str, Any]:
        dc, relabeling = BadcService.canonicalize(spec)
        return {
            "kind": dc.kind.value,
            "n": spec.n,
            "m": spec.m,
            "leftSigns": SignFormatter.to_word(spec.left_signs),
            "rightSigns": SignFormatter.to_word(spec.right_signs),
            "canonical": {"n": dc.n, "m": dc.m},
            "swapped": relabeling.swapped,
            "identity": relabeling.is_identity,
            "flips": [int(flip) for flip in relabeling.flips],
            "permutation": list(relabeling.permutation),
        }
