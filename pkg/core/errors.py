"""
Errors — one hierarchy for every failure the library signals.

Evidence-carrying errors (BoundRefuted, RangeViolation) hold the concrete
inputs and values so a caller can replay them.
"""


class DegreeKitError(Exception):
    """Base class for all library errors."""


class NotANaturalError(DegreeKitError, ValueError):
    """Input is negative or not an integer."""


class CapacityError(DegreeKitError, OverflowError):
    """A natural would exceed the 64-bit capacity."""


class SpecParseError(DegreeKitError, ValueError):
    """
    Malformed spec string.

    Attributes:
        text: The full spec text
        position: Offset of the offending character
    """

    def __init__(self, message, text='', position=0):
        self.message = message
        self.text = text
        self.position = position
        super().__init__(self._render())

    def _render(self):
        if not self.text:
            return self.message
        caret = ' ' * self.position + '^'
        return f"{self.message} at position {self.position}\n  {self.text}\n  {caret}"


class UnknownBuilderError(SpecParseError):
    """Spec names a builder that does not exist."""


class DescriptorMismatchError(DegreeKitError, ValueError):
    """Composed reductions do not meet at a common set."""


class NotInDomainError(DegreeKitError, KeyError):
    """Code is not a member of the domain."""

    def __str__(self):
        return Exception.__str__(self)


class NonComputableSetError(DegreeKitError, ValueError):
    """A domain was requested over a set without a computable rule."""


class PreconditionError(DegreeKitError, ValueError):
    """Audit called outside its precondition."""


class UsageError(DegreeKitError):
    """Bad command-line usage."""


class BoundRefuted(DegreeKitError):
    """
    Every member of a pyramid column maps to its own first coordinate.

    Attributes:
        x: Column index
        column: The x+1 codes <x,0>..<x,x>
        value: The common image (always x)
        bound: The refuted global bound c
    """

    def __init__(self, x, column, bound):
        self.x = x
        self.column = tuple(column)
        self.value = x
        self.bound = bound
        super().__init__(
            f"bound c={bound} refuted at x={x}: all {len(self.column)} column members map to {x}"
        )


class RangeViolation(DegreeKitError):
    """
    A candidate sent a domain code outside the target domain.

    Attributes:
        point: The input code
        image: The offending output code
        domain: Descriptor of the target domain
    """

    def __init__(self, point, image, domain):
        self.point = point
        self.image = image
        self.domain = domain
        super().__init__(f"image {image} of code {point} is not a member of {domain}")
