"""
Validators for configuration text, sign words and size arguments
"""

import re
from abc import ABC, abstractmethod
from typing import Any, List, Optional, Tuple

from helper_utilities.exceptions import ConfigurationSyntaxError, InvalidSizeError, LabError


class Validator(ABC):
    """Abstract base class for validators"""

    @abstractmethod
    def validate(self, value: Any) -> bool:
        """Validate the given value"""
        pass

    @abstractmethod
    def get_error_message(self) -> str:
        """Get error message for validation failure"""
        pass


class ConfigurationTextValidator(Validator):
    """
    Pair notation "(wl,wr)" for a double-cycle of sizes (n, m).

    wl has length n, wr has length m, both are 0/1 words and both start with
    the hub state.
    """

    PATTERN = re.compile(r'^\(\s*([01]+)\s*,\s*([01]+)\s*\)$')

    def __init__(self, n: Optional[int] = None, m: Optional[int] = None):
        self.n = n
        self.m = m
        self.error_message = "Expected a configuration such as (0101,01)"

    def validate(self, value: str) -> bool:
        try:
            self.parse(value)
            return True
        except ConfigurationSyntaxError as e:
            self.error_message = str(e)
            return False

    def get_error_message(self) -> str:
        return self.error_message

    def parse(self, value: str) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """Return the two words as tuples of bits"""
        if not value or not isinstance(value, str):
            raise ConfigurationSyntaxError("Empty configuration text")
        match = self.PATTERN.match(value.strip())
        if not match:
            raise ConfigurationSyntaxError(f"'{value}' is not of the form (wl,wr) over 0/1")
        left, right = match.group(1), match.group(2)
        if left[0] != right[0]:
            raise ConfigurationSyntaxError(
                f"'{value}': both words must start with the shared hub state"
            )
        if self.n is not None and len(left) != self.n:
            raise ConfigurationSyntaxError(f"'{value}': left word must have length {self.n}")
        if self.m is not None and len(right) != self.m:
            raise ConfigurationSyntaxError(f"'{value}': right word must have length {self.m}")
        return tuple(int(c) for c in left), tuple(int(c) for c in right)

    @classmethod
    def looks_like(cls, value: str) -> bool:
        return bool(cls.PATTERN.match(value.strip())) if value else False


class SignWordValidator(Validator):
    """A cycle's arc signs written as a word over {+,-}, e.g. '+-+'"""

    PATTERN = re.compile(r'^[+-]+$')

    def __init__(self, length: Optional[int] = None):
        self.length = length
        self.error_message = "Signs must be a word over '+' and '-'"

    def validate(self, value: str) -> bool:
        if not value or not isinstance(value, str):
            return False
        if not self.PATTERN.match(value):
            return False
        return self.length is None or len(value) == self.length

    def get_error_message(self) -> str:
        if self.length is not None:
            return f"{self.error_message} of length {self.length}"
        return self.error_message

    def parse(self, value: str) -> Tuple[int, ...]:
        if not self.validate(value):
            raise LabError(f"'{value}': {self.get_error_message()}")
        return tuple(1 if c == '+' else -1 for c in value)


class SizeValidator(Validator):
    """Cycle sizes and size lists"""

    def __init__(self, minimum: int = 1, maximum: Optional[int] = None):
        self.minimum = minimum
        self.maximum = maximum
        self.error_message = f"Size must be an integer >= {minimum}"

    def validate(self, value: Any) -> bool:
        if isinstance(value, bool) or not isinstance(value, int):
            return False
        if value < self.minimum:
            return False
        return self.maximum is None or value <= self.maximum

    def get_error_message(self) -> str:
        if self.maximum is not None:
            return f"Size must be an integer in [{self.minimum}, {self.maximum}]"
        return self.error_message

    def require(self, value: Any, name: str = "size") -> int:
        if not self.validate(value):
            raise InvalidSizeError(f"{name}={value!r}: {self.get_error_message()}")
        return value

    def parse_list(self, text: str) -> List[int]:
        """Comma-separated sizes such as '2,4,6'"""
        sizes = []
        for chunk in (text or "").split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            if not chunk.isdigit():
                raise InvalidSizeError(f"'{chunk}' is not a size")
            sizes.append(self.require(int(chunk)))
        if not sizes:
            raise InvalidSizeError("Empty size list")
        return sizes
