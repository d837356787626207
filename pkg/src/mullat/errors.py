"""Exception hierarchy. Every error may carry a ``witness`` tuple of element indices."""


class MullatError(Exception):
    def __init__(self, message: str = "", witness: tuple | None = None):
        super().__init__(message)
        self.witness = witness


# lattice construction
class NotAPoset(MullatError):
    pass


class NotALattice(MullatError):
    pass


class NoBounds(MullatError):
    pass


# multiplication axioms
class AxiomError(MullatError):
    pass


class NotCommutative(AxiomError):
    pass


class NotAssociative(AxiomError):
    pass


class NoIdentity(AxiomError):
    pass


class NotMonotone(AxiomError):
    pass


class ProductAboveMeet(AxiomError):
    pass


class DegenerateLattice(AxiomError):
    pass


class WrongClass(MullatError):
    pass


class NotProper(MullatError):
    pass


# multiplicatively closed sets
class InvalidMultSet(MullatError):
    pass


class MissingTop(InvalidMultSet):
    pass


class ContainsBottom(InvalidMultSet):
    pass


class NotClosed(InvalidMultSet):
    pass


class NotAscending(MullatError):
    pass


class EmptySubset(MullatError):
    pass


# decompositions
class SaturationIsTop(MullatError):
    pass


class MalformedDecomposition(MullatError):
    pass


class NoDecomposition(MullatError):
    pass


# ring side
class InvalidRingSet(MullatError):
    pass


class RingSetNotClosed(InvalidRingSet):
    pass


class RingSetContainsZero(InvalidRingSet):
    pass


class RingSetMissingOne(InvalidRingSet):
    pass
