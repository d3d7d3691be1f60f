"""Exception types shared across the package."""


class ShellboundError(Exception):
    pass


class DivisionBySingularSeries(ShellboundError, ZeroDivisionError):
    pass


class InnerNotVanishing(ShellboundError, ValueError):
    pass


class NotNormalized(ShellboundError, ValueError):
    pass


class BranchUndefined(ShellboundError, ValueError):
    pass


class OverflowGuard(ShellboundError, OverflowError):
    pass


class PoleProximity(ShellboundError, ValueError):
    pass


class NotSchwarz(ShellboundError, ValueError):
    pass


class InvalidSpec(ShellboundError, ValueError):
    pass


class DegenerateDenominator(ShellboundError, ArithmeticError):
    """Raised where a published bound is undefined (radicand or denominator <= 0)."""
