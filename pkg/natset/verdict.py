"""
Verdict Module
Three-valued decisions carrying the rule that produced them
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional


class Truth(Enum):
    """Outcome of a decision"""
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"


class BlockSignature(Enum):
    """Shape of S ∩ Δ_j"""
    EMPTY = "empty"
    FINITE_NONEMPTY = "finite-nonempty"
    INFINITE = "infinite"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    """
    Decision with certificate

    Definitive verdicts name the rule applied; Unknown verdicts carry the
    horizon that was reached.
    """

    value: Truth
    rule: str
    detail: str = ''
    horizon: Optional[int] = None

    @classmethod
    def true(cls, rule: str, detail: str = '') -> 'Verdict':
        return cls(Truth.TRUE, rule, detail)

    @classmethod
    def false(cls, rule: str, detail: str = '') -> 'Verdict':
        return cls(Truth.FALSE, rule, detail)

    @classmethod
    def unknown(cls, horizon: Optional[int], rule: str, detail: str = '') -> 'Verdict':
        return cls(Truth.UNKNOWN, rule, detail, horizon)

    @classmethod
    def of(cls, flag: bool, rule: str, detail: str = '') -> 'Verdict':
        return cls(Truth.TRUE if flag else Truth.FALSE, rule, detail)

    @property
    def is_true(self) -> bool:
        return self.value is Truth.TRUE

    @property
    def is_false(self) -> bool:
        return self.value is Truth.FALSE

    @property
    def is_unknown(self) -> bool:
        return self.value is Truth.UNKNOWN

    @property
    def is_definitive(self) -> bool:
        return self.value is not Truth.UNKNOWN

    @property
    def certificate(self) -> str:
        text = f"{self.rule}: {self.detail}" if self.detail else self.rule
        if self.is_unknown and self.horizon is not None:
            text += f" (horizon {self.horizon})"
        return text

    def __str__(self) -> str:
        return f"{self.value.value} [{self.certificate}]"
