"""Exception hierarchy shared by every module.

Searches never raise when nothing is found; they return ``None``.
"""


class SemicatError(Exception):
    """Base class for all library errors."""


class ValidationError(SemicatError, ValueError):
    """Data that fails the axioms of the structure it claims to be."""


# categories
class MissingComposite(ValidationError):
    pass


class NotAssociative(ValidationError):
    pass


class IdentityNotNeutral(ValidationError):
    pass


class DanglingEndpoint(ValidationError):
    pass


class UnknownObject(ValidationError, KeyError):
    def __str__(self):
        return ValidationError.__str__(self)


class NotAMonoid(ValidationError):
    pass


# semifunctors and transformations
class CompositionNotPreserved(ValidationError):
    pass


class EndpointMismatch(ValidationError):
    pass


class SourceTargetMismatch(ValidationError):
    pass


class NotIdempotent(ValidationError):
    pass


class NotSeminatural(ValidationError):
    pass


class ShapeMismatch(ValidationError):
    pass


# semiadjunctions
class SemitriangularFailure(ValidationError):
    def __init__(self, side, obj, detail=""):
        self.side = side
        self.obj = obj
        msg = f"semitriangular identity fails on the {side} side at object {obj!r}"
        super().__init__(msg + (f": {detail}" if detail else ""))


class NotRightSemiadjointData(ValidationError):
    pass


class NotLeftSemiadjointData(ValidationError):
    pass


class NotSelfAdjoint(ValidationError):
    pass


# properties
class NotSemiseparableSolution(ValidationError):
    pass


class HypothesisNotSatisfied(SemicatError):
    pass


class InvariantViolation(SemicatError, AssertionError):
    """A proven identity failed on a concrete instance. Always a bug."""


# constructions, gallery, io
class CompletionTooLarge(SemicatError):
    pass


class UnknownEntry(SemicatError, KeyError):
    def __str__(self):
        return SemicatError.__str__(self)


class ExpectationFailed(SemicatError):
    def __init__(self, entry, prop, detail=""):
        self.entry = entry
        self.prop = prop
        super().__init__(f"{entry}: expectation {prop!r} failed" + (f" ({detail})" if detail else ""))


class IdentityFailure(SemicatError):
    def __init__(self, cell, detail=""):
        self.cell = cell
        super().__init__(f"identity fails at {cell!r}" + (f": {detail}" if detail else ""))


class ParseError(SemicatError, ValueError):
    def __init__(self, message, path="$"):
        self.path = path
        super().__init__(f"{path}: {message}")


class SchemaError(SemicatError, ValueError):
    def __init__(self, message, path="$"):
        self.path = path
        super().__init__(f"{path}: {message}")
