"""Exception hierarchy shared by the engine and the file layer."""


class DPOError(Exception):
    """Base class for all errors raised by :mod:`dporewrite`."""


class DanglingRestriction(DPOError):
    """A restriction keeps an edge whose source or target is dropped."""

    def __init__(self, edges):
        self.edges = tuple(edges)
        super().__init__(f"kept edge(s) with dropped endpoint: {list(self.edges)!r}")


class DomainMismatch(DPOError):
    """Composition where an image of the first map is outside the second's domain."""


class NotInjective(DPOError):
    """A construction that needs injective morphisms received a non-injective one."""


class NotInjectiveSpan(NotInjective):
    """Pushout decision asked for a span whose legs are not both injective."""


class DanglingViolation(DPOError):
    """A match fails the dangling condition, so the deletion is not a graph."""


class NonUniqueMediator(DPOError):
    """More than one mediating morphism exists for a cocone."""

    def __init__(self, count):
        self.count = count
        super().__init__(f"found at least {count} mediating morphisms")


class BoundTooLarge(DPOError):
    """The brute-force oracle would exceed its candidate budget."""


class ParseError(DPOError):
    """Malformed graph, rule, morphism or square document."""

    def __init__(self, message, line=None, column=None, path=None):
        self.message = message
        self.line = line
        self.column = column
        self.path = path
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        elif path:
            where = f" (at {path})"
        super().__init__(message + where)


class ValidationError(DPOError):
    """A parsed document is structurally fine but fails well-formedness."""

    def __init__(self, report, what="graph"):
        self.report = report
        super().__init__(f"invalid {what}: {report}")
