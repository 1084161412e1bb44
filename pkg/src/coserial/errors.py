"""Exception hierarchy shared by every coserial module."""


class CoserialError(Exception):
    """Base class for all library errors."""


class QuiverSyntaxError(CoserialError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class DuplicateArrow(QuiverSyntaxError):
    def __init__(self, src, dst, line=None):
        self.src, self.dst = src, dst
        super().__init__(f"duplicate arrow {src} -> {dst}", line)


class UnknownVertex(CoserialError, KeyError):
    def __init__(self, name, line=None):
        self.name = name
        self.line = line
        super().__init__(name)

    def __str__(self):
        prefix = f"line {self.line}: " if self.line is not None else ""
        return f"{prefix}unknown vertex {self.name!r}"


class BadLabel(QuiverSyntaxError):
    pass


class FamilyWindowMismatch(CoserialError, ValueError):
    pass


class NotSerialInput(CoserialError, ValueError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NotRightSerialInput(NotSerialInput):
    pass


class DisconnectedInput(CoserialError, ValueError):
    pass


class EmptySubset(CoserialError, ValueError):
    pass


class InfiniteLocalization(CoserialError, ValueError):
    def __init__(self, pairs):
        self.pairs = list(pairs)
        super().__init__(f"localization has infinite labels at {self.pairs}")


class NonPointedLabel(CoserialError, ValueError):
    def __init__(self, arrow):
        self.arrow = arrow
        super().__init__(f"arrow {arrow.src}->{arrow.dst} label ({arrow.d1},{arrow.d2}) is not pointed")


class NotInvariant(CoserialError, ValueError):
    pass


class DimensionBoundExceeded(CoserialError, ValueError):
    pass


class InjectiveNode(CoserialError, ValueError):
    pass


class NotNilpotent(CoserialError, ValueError):
    pass
