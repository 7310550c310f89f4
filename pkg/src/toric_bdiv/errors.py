"""Exception hierarchy. Every error carries a short machine-readable ``code``."""


class ToricError(Exception):
    code = "error"


class InvalidInput(ToricError, ValueError):
    code = "invalid_input"


class DimensionMismatch(InvalidInput):
    code = "dimension_mismatch"


class UnsupportedRepresentation(ToricError):
    code = "unsupported_representation"


class LPError(ToricError):
    code = "lp_error"


class Infeasible(LPError):
    code = "lp_infeasible"


class Unbounded(LPError):
    code = "lp_unbounded"


class NotMPrimary(InvalidInput):
    code = "not_m_primary"


class ZeroIdeal(InvalidInput):
    code = "zero_ideal"


class NotAntiEffective(InvalidInput):
    code = "not_anti_effective"


class UnboundedBelow(InvalidInput):
    code = "unbounded_below"


class NotBounded(InvalidInput):
    """Divisor lies in Div+ but not in Div^b."""

    code = "not_bounded"


class DegenerateDivisor(InvalidInput):
    """The zero b-divisor: its extracted ideals are all of R."""

    code = "degenerate_divisor"


class InsufficientBox(ToricError):
    code = "insufficient_box"


class InternalError(ToricError):
    code = "internal_error"
