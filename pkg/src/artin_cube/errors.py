"""Exception base for violated operation preconditions (CLI exit status 3)."""


class PreconditionError(ValueError):
    pass
