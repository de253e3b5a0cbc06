"""Exception types shared across the package.

Every error carries its class name verbatim into CLI output, so keep the
names stable.
"""


class SymHomError(Exception):
    """Base class for all errors raised by :mod:`symhom`."""


class ArityMismatch(SymHomError, ValueError):
    pass


class InvalidMorphism(SymHomError, ValueError):
    pass


class DomainError(SymHomError, ValueError):
    pass


class NotAssociative(SymHomError, ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NotUnital(SymHomError, ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NoIdentity(SymHomError, ValueError):
    pass


class UngradedAlgebra(SymHomError, ValueError):
    pass


class NonCommutativeMonoid(SymHomError, ValueError):
    pass


class CompositeCharacteristic(SymHomError, ValueError):
    pass


class ShapeMismatch(SymHomError, ValueError):
    pass


class NotAComplex(SymHomError, ValueError):
    def __init__(self, msg, column=None):
        super().__init__(msg)
        self.column = column


class InvalidCover(SymHomError, ValueError):
    pass


class DegreeOutOfRange(SymHomError, ValueError):
    pass


class NotCycleFree(SymHomError, ValueError):
    pass


class ChainMapViolation(SymHomError, AssertionError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness
