"""Exception hierarchy shared by every zzlab module.

The CLI maps any ``ZZLabError`` to exit code 1 with a JSON ``{error, detail}``
payload, so each class name doubles as a stable machine-readable error tag.
"""

from __future__ import annotations


class ZZLabError(Exception):
    """Base class for all library errors."""

    @property
    def tag(self) -> str:
        return type(self).__name__


# core
class InvalidGraph(ZZLabError):
    pass


class DuplicateDart(InvalidGraph):
    pass


class MissingDart(InvalidGraph):
    pass


class FixedDart(InvalidGraph):
    pass


class PortOutOfRange(InvalidGraph):
    pass


class FormatError(ZZLabError):
    pass


# generators
class SizeTooSmall(ZZLabError):
    pass


class UnknownVariant(ZZLabError):
    pass


# products
class DegreeMismatch(ZZLabError):
    pass


class DisconnectedFactor(ZZLabError):
    pass


class NotAnEdge(ZZLabError):
    pass


class NegativeResidual(ZZLabError):
    pass


# parity
class OddDegree(ZZLabError):
    pass


class CorrespondenceViolated(ZZLabError):
    pass


class DegreeNot4(ZZLabError):
    pass


class NotPartitionPreserving(ZZLabError):
    pass


class ConditionFailure(ZZLabError):
    """An explicit-isomorphism condition failed on a specific dart.

    ``condition`` is 1, 2 or 3 depending on whether the dart joins two
    half-degree vertices, a half-degree and a full-degree vertex, or two
    full-degree vertices.
    """

    def __init__(self, condition: int, dart: tuple[int, int], detail: str = ""):
        self.condition = condition
        self.dart = dart
        msg = f"condition ({condition}) fails at dart {dart}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


# iso
class SizeLimitExceeded(ZZLabError):
    pass


# spectral
class NotSymmetric(ZZLabError):
    pass


class MultiplicityMismatch(ZZLabError):
    pass


# basilica
class OrderingMismatch(ZZLabError):
    pass


class SpectrumMismatch(ZZLabError):
    pass
