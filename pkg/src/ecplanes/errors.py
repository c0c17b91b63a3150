"""Exception hierarchy. Every library error derives from EcplanesError so the
CLI can map it to exit code 1."""


class EcplanesError(Exception):
    pass


class DomainError(EcplanesError, ValueError):
    pass


class InvalidInput(DomainError):
    pass


class NonPrimeOrder(DomainError):
    pass


class OrderTooLarge(DomainError):
    pass


class IdOutOfRange(DomainError, IndexError):
    pass


class PartialColoringError(DomainError):
    pass


class BudgetExceeded(EcplanesError):
    pass


class NoTransition(EcplanesError):
    def __init__(self, msg, scan=None):
        super().__init__(msg)
        self.scan = scan or []


class NeighborhoodTooLarge(DomainError):
    pass


class InvalidCover(DomainError):
    pass


class NoRoot(EcplanesError):
    pass


class InvalidTapeEntry(DomainError):
    pass


class InconsistentTrace(EcplanesError):
    pass


class InvalidInstance(DomainError):
    pass


class InvalidRecord(DomainError):
    pass


class KraftViolated(DomainError):
    pass
