# app/errors.py


class MonodepthError(Exception):
    """Base class for every error raised by the analyzer."""


class InvalidInputError(MonodepthError):
    pass


class ContextMismatchError(InvalidInputError):
    pass


class IdealSyntaxError(InvalidInputError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column

    def __reduce__(self):
        return (type(self), (self.message, self.line, self.column))


class UnitIdealError(MonodepthError):
    pass


class ZeroIdealError(MonodepthError):
    pass


class NotEquigeneratedError(MonodepthError):
    pass


class ResourceLimitExceeded(MonodepthError):
    """
    A configured ceiling was hit. The computation stopped without an answer;
    `partial` may carry whatever prefix was completed.
    """

    def __init__(self, limit_name: str, limit: int, partial=None):
        super().__init__(f"resource ceiling '{limit_name}' exceeded (limit {limit})")
        self.limit_name = limit_name
        self.limit = limit
        self.partial = partial

    def __reduce__(self):
        # process pools pickle exceptions back to the parent
        return (type(self), (self.limit_name, self.limit, self.partial))


class InvariantViolation(MonodepthError):
    pass
