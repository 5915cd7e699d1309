"""Error classes raised by the awdaha engine."""

from __future__ import annotations

from collections.abc import Sequence

WORD_DISPLAY_LIMIT = 200


def shorten(text: str, limit: int = WORD_DISPLAY_LIMIT) -> str:
    """Cut ``text`` to at most ``limit`` characters, marking the cut."""
    if len(text) <= limit:
        return text
    suffix = f"... [{len(text)} chars]"
    return text[: max(0, limit - len(suffix))] + suffix


class AwdahaError(Exception):
    """Base class for every error raised by awdaha.

    Subclasses store their context as attributes and build a readable
    message when none is given.

    Attributes:
        message: Detailed error message combining all context
    """

    message: str

    def __str__(self) -> str:
        # KeyError subclasses would otherwise repr-quote the message.
        return self.message


class DivisionByZero(AwdahaError, ZeroDivisionError):
    """Raised when a scalar of Q(q) is divided by zero.

    Attributes:
        operand: Display form of the dividend (or of the Laurent spec being built)
        message: Detailed error message
    """

    def __init__(self, operand: str, message: str | None = None) -> None:
        """Initialize with the operand that was being divided.

        Args:
            operand: Display form of the dividend
            message: Custom error message (auto-generated if None)
        """
        self.operand = operand
        if message is None:
            message = f"Division by zero in Q(q) while dividing {operand}"
        self.message = message
        super().__init__(message)


class AlphabetMismatch(AwdahaError, ValueError):
    """Raised when two elements over different alphabets are combined.

    Attributes:
        left: Generator names of the left operand's alphabet
        right: Generator names of the right operand's alphabet
        message: Detailed error message
    """

    def __init__(
        self,
        left: Sequence[str],
        right: Sequence[str],
        message: str | None = None,
    ) -> None:
        """Initialize with the two alphabets.

        Args:
            left: Generator names of the left alphabet
            right: Generator names of the right alphabet
            message: Custom error message (auto-generated if None)
        """
        self.left = tuple(left)
        self.right = tuple(right)
        if message is None:
            message = (
                f"Alphabet mismatch: [{' '.join(self.left)}] vs "
                f"[{' '.join(self.right)}]"
            )
        self.message = message
        super().__init__(message)


class MissingImage(AwdahaError, KeyError):
    """Raised when a substitution meets a generator it has no image for.

    Attributes:
        generator: Display name of the generator without an image
        morphism: Name of the morphism (or "substitute" for raw calls)
        message: Detailed error message
    """

    def __init__(
        self,
        generator: str,
        morphism: str = "substitute",
        message: str | None = None,
    ) -> None:
        """Initialize with the generator that has no image.

        Args:
            generator: Display name of the generator
            morphism: Name of the morphism being applied
            message: Custom error message (auto-generated if None)
        """
        self.generator = generator
        self.morphism = morphism
        if message is None:
            message = f"Morphism '{morphism}' has no image for generator '{generator}'"
        self.message = message
        super().__init__(message)


class NonTermination(AwdahaError, RuntimeError):
    """Raised when normalization runs out of fuel or detects a rewrite cycle.

    The rule sets shipped with awdaha terminate, so this error points at a
    mis-entered or mutated rule set.

    Attributes:
        fuel: Rule-application budget of the normalize call
        spent: Rule applications performed before giving up
        word: Display form of the word being reduced when the error occurred;
            the message shows at most ``WORD_DISPLAY_LIMIT`` characters of it
        cycle: True when a rewrite cycle was detected before fuel ran out
        message: Detailed error message
    """

    def __init__(
        self,
        fuel: int,
        spent: int,
        word: str,
        cycle: bool = False,
        message: str | None = None,
    ) -> None:
        """Initialize with the fuel accounting.

        Args:
            fuel: Rule-application budget
            spent: Rule applications performed
            word: Display form of the word under reduction
            cycle: Whether a rewrite cycle was detected
            message: Custom error message (auto-generated if None)
        """
        self.fuel = fuel
        self.spent = spent
        self.word = word
        self.cycle = cycle
        if message is None:
            shown = shorten(word)
            if cycle:
                message = (
                    f"Rewrite cycle detected while reducing {shown} "
                    f"after {spent} rule applications"
                )
            else:
                message = (
                    f"Normalization did not terminate within fuel {fuel} "
                    f"(spent {spent}) while reducing {shown}"
                )
        self.message = message
        super().__init__(message)


class AxisError(AwdahaError, ValueError):
    """Raised when a Laurent fold meets a word off the requested axis.

    Attributes:
        axis: The axis letter ("X" or "Y")
        word: Display form of the offending word
        message: Detailed error message
    """

    def __init__(self, axis: str, word: str, message: str | None = None) -> None:
        """Initialize with the axis and the offending word.

        Args:
            axis: The axis letter
            word: Display form of the offending word
            message: Custom error message (auto-generated if None)
        """
        self.axis = axis
        self.word = word
        if message is None:
            message = f"Word {word} is not a power of {axis} or {axis}^-1"
        self.message = message
        super().__init__(message)


class NotInT(AwdahaError, ValueError):
    """Raised when an element outside the subalgebra generated by t0, T0..T3
    is treated as a T-element.

    Attributes:
        word: Display form of the offending word
        message: Detailed error message
    """

    def __init__(self, word: str, message: str | None = None) -> None:
        """Initialize with the offending word.

        Args:
            word: Display form of the offending word
            message: Custom error message (auto-generated if None)
        """
        self.word = word
        if message is None:
            message = f"Word {word} involves letters outside t0, T0, T1, T2, T3"
        self.message = message
        super().__init__(message)


class UnknownName(AwdahaError, KeyError):
    """Raised when a derived element or identifier is not known to an algebra.

    Attributes:
        name: The requested name
        algebra: Name of the algebra that was asked
        known: Names the algebra does know
        message: Detailed error message
    """

    def __init__(
        self,
        name: str,
        algebra: str,
        known: Sequence[str] = (),
        message: str | None = None,
    ) -> None:
        """Initialize with the unknown name.

        Args:
            name: The requested name
            algebra: Name of the algebra
            known: Names the algebra knows
            message: Custom error message (auto-generated if None)
        """
        self.name = name
        self.algebra = algebra
        self.known = tuple(known)
        if message is None:
            hint = f" (known: {', '.join(self.known)})" if self.known else ""
            message = f"Unknown name '{name}' in algebra {algebra}{hint}"
        self.message = message
        super().__init__(message)


class ExpressionSyntaxError(AwdahaError, ValueError):
    """Raised when expression text does not follow the expression grammar.

    Attributes:
        text: The full source text
        offset: Byte offset of the offending position
        reason: Short description of the problem
        message: Detailed error message with a caret marker
    """

    def __init__(
        self,
        text: str,
        offset: int,
        reason: str,
        message: str | None = None,
    ) -> None:
        """Initialize with the source position.

        Args:
            text: The full source text
            offset: Byte offset of the offending position
            reason: Short description of the problem
            message: Custom error message (auto-generated if None)
        """
        self.text = text
        self.offset = offset
        self.reason = reason
        if message is None:
            column = len(text.encode()[:offset].decode(errors="ignore"))
            message = (
                f"Syntax error at offset {offset}: {reason}\n"
                f"  {text}\n  {' ' * column}^"
            )
        self.message = message
        super().__init__(message)


class SpecFormatError(AwdahaError, ValueError):
    """Raised when an algebra-spec file cannot be read.

    Attributes:
        line_number: One-based line number
        line: The offending line
        reason: Short description of the problem
        message: Detailed error message
    """

    def __init__(
        self,
        line_number: int,
        line: str,
        reason: str,
        message: str | None = None,
    ) -> None:
        """Initialize with the offending line.

        Args:
            line_number: One-based line number
            line: The offending line
            reason: Short description of the problem
            message: Custom error message (auto-generated if None)
        """
        self.line_number = line_number
        self.line = line
        self.reason = reason
        if message is None:
            message = f"Spec line {line_number}: {reason}: {line.strip()!r}"
        self.message = message
        super().__init__(message)
