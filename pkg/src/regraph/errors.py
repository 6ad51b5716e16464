"""Exception types shared by every module."""


class GraphInputError(ValueError):
    """Malformed input: bad vertex index, duplicate edge, invalid partition, parse error."""


class CapacityError(GraphInputError):
    """An operation would exceed the 64-vertex capacity."""


class ResourceError(RuntimeError):
    """A computation exceeded its configured face/subset budget.

    Budgeted searches that degrade gracefully (cochordal covers, mate search)
    return flagged results instead of raising this.
    """
