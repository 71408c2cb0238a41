"""Enumerations for the qlp domain model."""

from __future__ import annotations

import sys

if sys.version_info >= (3, 11):
    from enum import StrEnum
else:  # pragma: no cover - backport of the 3.11 stdlib StrEnum
    from enum import Enum

    class StrEnum(str, Enum):
        def __str__(self) -> str:
            return str(self.value)

        def __format__(self, format_spec: str) -> str:
            return str.__format__(str(self), format_spec)

        @staticmethod
        def _generate_next_value_(name, start, count, last_values):  # type: ignore[no-untyped-def]
            return name.lower()


class ChannelFamily(StrEnum):
    DEPOLARIZING = "depolarizing"
    ERASURE = "erasure"
    IDENTITY = "identity"


class EntropyBase(StrEnum):
    BITS = "bits"
    NATS = "nats"


class BoundKind(StrEnum):
    """Which side of the true value an optimizer result certifies."""

    EXACT = "exact"
    LOWER = "lower"
    UPPER = "upper"


class SignAssertion(StrEnum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NONE = "none"


class VerifySuite(StrEnum):
    WEYL = "weyl"
    TELEPORT = "teleport"
    SUPERDENSE = "superdense"
    DIRECTSUM = "directsum"
    FACTORIZATION = "factorization"
    SSA = "ssa"
    ERASURE_ADD = "erasure-add"
    FANNES = "fannes"
    ALL = "all"
