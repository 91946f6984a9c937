class BehaviourError(Exception):
    exit_code: int = 1

    def __init__(self, detail: str) -> None:
        super().__init__(detail)
        self.detail = detail


class ParseError(BehaviourError):
    exit_code = 2


class ValidationError(BehaviourError):
    exit_code = 3


class SchemaViolation(ValidationError):
    pass


class SchemaMismatch(ValidationError):
    pass


class VariableClash(ValidationError):
    pass


class HorizonError(ValidationError):
    pass


class HorizonMismatch(HorizonError):
    pass


class UnknownVariable(ValidationError):
    pass


class OverlapError(ValidationError):
    pass


class LengthError(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class UnknownBlock(ValidationError):
    pass


class EnumerationCapExceeded(BehaviourError):
    exit_code = 4

    def __init__(self, count: int, cap: int, what: str = "behaviour") -> None:
        super().__init__(f"{what} would materialise {count} rows, cap is {cap}")
        self.count = count
        self.cap = cap


class SearchSpaceTooLarge(BehaviourError):
    exit_code = 4

    def __init__(self, combinations: int, cap: int) -> None:
        super().__init__(
            f"necessity search needs {combinations} controller families, cap is {cap}"
        )
        self.combinations = combinations
        self.cap = cap


class NotSynthesizable(BehaviourError):
    exit_code = 5


class InternalInconsistency(BehaviourError):
    exit_code = 1
