"""Exception hierarchy shared by every module of the package."""


class ChessArmError(Exception):
    """Base class for all expected failures."""

    @property
    def name(self):
        return type(self).__name__


class LengthMismatch(ChessArmError, ValueError):
    pass


class IndexOutOfRange(ChessArmError, IndexError):
    pass


class IkFailure(ChessArmError):
    """Raised when no joint solution exists for a requested target."""


class OutOfReach(IkFailure):
    def __init__(self, distance, min_reach, max_reach):
        self.distance = distance
        self.min_reach = min_reach
        self.max_reach = max_reach
        super().__init__(
            f"target distance {distance:.6g} outside reach [{min_reach:.6g}, {max_reach:.6g}]"
        )


class Singular(IkFailure):
    pass


class AsinDomain(IkFailure):
    def __init__(self, ratio):
        self.ratio = ratio
        super().__init__(f"asin argument {ratio:.6g} outside [-1, 1]")


class NonPositiveTime(ChessArmError, ValueError):
    pass


class TooFewJoints(ChessArmError, ValueError):
    pass


class CellOutOfRange(ChessArmError, ValueError):
    pass


class NonPositiveLink(ChessArmError, ValueError):
    pass


class UnreachableBoard(ChessArmError):
    def __init__(self, report):
        self.report = report
        super().__init__(
            f"{report.unreachable_count} of {len(report.cells)} cells unreachable"
        )


class GripperStateError(ChessArmError):
    pass


class RotationBoundError(ChessArmError):
    """A single rotation step would exceed pi in magnitude."""


class TraceCapExceeded(ChessArmError):
    pass


class CommandSyntaxError(ChessArmError):
    """Malformed command text.

    ``offset`` is the byte offset (UTF-8) of the offending token and
    ``expected`` lists the tokens that would have been accepted there.
    """

    def __init__(self, text, offset, expected, found):
        self.text = text
        self.offset = offset
        self.expected = tuple(expected)
        self.found = found
        want = " or ".join(repr(e) for e in self.expected)
        got = "end of input" if found is None else repr(found)
        super().__init__(f"at byte {offset}: expected {want}, found {got}")


class ConfigError(ChessArmError, ValueError):
    pass
