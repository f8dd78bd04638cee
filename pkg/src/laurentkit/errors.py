"""Exception hierarchy shared by every module."""


class LaurentKitError(Exception):
    """Base class for all library errors."""


class RankMismatch(LaurentKitError, ValueError):
    pass


class DomainMismatch(LaurentKitError, ValueError):
    pass


class NotAUnit(LaurentKitError, ArithmeticError):
    pass


class NotUnimodular(LaurentKitError, ArithmeticError):
    pass


class ZeroPolynomial(LaurentKitError, ValueError):
    pass


class NotARelation(LaurentKitError, ValueError):
    pass


class NotHomogeneous(LaurentKitError, ValueError):
    pass


class MalformedPresentation(LaurentKitError, ValueError):
    pass


class MalformedHom(LaurentKitError, ValueError):
    pass


class ZeroElement(LaurentKitError, ValueError):
    pass


class ZeroExponent(LaurentKitError, ValueError):
    pass


class HypothesisFailed(LaurentKitError):
    """A required hypothesis was checked and found false."""


class MissingHypothesis(HypothesisFailed):
    """A hypothesis is neither asserted nor machine-verifiable."""


class NotRankOne(HypothesisFailed):
    pass


class NoBranchApplies(HypothesisFailed):
    pass


class DecompositionFailed(HypothesisFailed):
    """An image that must be a unit monomial is not one."""


class ParseError(LaurentKitError):
    def __init__(self, message, line=None, column=None, source=None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        super().__init__(self.__str__())

    def __str__(self):
        where = []
        if self.source:
            where.append(str(self.source))
        if self.line is not None:
            where.append(str(self.line))
        if self.column is not None:
            where.append(str(self.column))
        prefix = ":".join(where)
        return f"{prefix}: {self.message}" if prefix else self.message
