"""Exception hierarchy shared by every package

Each family carries the exit code the command line reports for it.
"""


class AllianceError(Exception):
    """Base class for all errors raised by the alliance tooling"""

    exit_code = 1

    def __init__(self, err_msg: str):
        super().__init__(err_msg)
        self.err_msg = err_msg

    def __str__(self):
        return self.err_msg


class InputError(AllianceError, ValueError):
    """Malformed input or arguments"""

    exit_code = 2


class CapacityError(AllianceError):
    """A size cap or feasibility bound was exceeded"""

    exit_code = 3


class CheckError(AllianceError):
    """A verification precondition or check failed"""

    exit_code = 1


# Input errors

class MalformedHeader(InputError):
    pass


class TruncatedBitVector(InputError):
    pass


class TrailingGarbage(InputError):
    pass


class LoopEdge(InputError):
    pass


class VertexOutOfRange(InputError):
    pass


class InvalidAdjacency(InputError):
    pass


class EdgeListSyntaxError(InputError):
    pass


class BadParams(InputError):
    pass


class EmptySet(InputError):
    pass


class DisconnectedSubset(InputError):
    pass


class IndexOutOfKRange(InputError):
    pass


class UnsupportedOrder(InputError):
    pass


class PoolSpecError(InputError):
    pass


# Capacity errors

class OrderOutOfRange(CapacityError):
    pass


class OrderTooLargeForFormat(CapacityError):
    pass


class ProductTooLarge(CapacityError):
    pass


class UnionTooLarge(CapacityError):
    pass


class OrderExceedsNaiveLimit(CapacityError):
    pass


class OrderExceedsCanonicalLimit(CapacityError):
    pass


class OrderExceedsExhaustiveLimit(CapacityError):
    pass


class InfeasibleParams(CapacityError):
    pass


# Check errors

class PolynomialGraphMismatch(CheckError):
    pass


class NotRegular(CheckError):
    pass


class NotCubic(CheckError):
    pass


class LineError(AllianceError):
    """Wraps an error raised while reading one line of a batch stream"""

    def __init__(self, line_number: int, cause: AllianceError):
        super().__init__(f"line {line_number}: {cause}")
        self.line_number = line_number
        self.cause = cause
        self.exit_code = cause.exit_code
