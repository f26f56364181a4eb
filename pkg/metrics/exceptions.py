class MeasureError(ValueError):
    """A measure's precondition does not hold for its operands."""


class InvalidMeasureParams(MeasureError):
    pass


class EmptyCut(MeasureError):
    pass


class NotNormal(MeasureError):
    pass


class NotConvex(MeasureError):
    pass


class NoOverlapLevels(MeasureError):
    """No α-level has both cuts present, so nothing can stand in for an empty cut."""


class DegenerateUniverse(MeasureError):
    pass
