"""Exception hierarchy.

Everything raised on purpose by this package derives from MonoidError.
InputError covers violated preconditions and malformed input (the CLI maps
these to exit code 2); ArithmeticOverflow covers blown size guards (exit 1).
"""


class MonoidError(Exception):
    """Base class for all package errors."""


class InputError(MonoidError):
    """A precondition on user-supplied input was violated."""


class EmptyInput(InputError):
    """A generator list was empty."""


class ZeroGenerator(InputError):
    """A numerical generator was zero or negative."""


class NonCoprimeGenerators(InputError):
    """gcd of the generators is not 1, so the complement in N is infinite."""


class ZeroVectorGenerator(InputError):
    """An affine generator was the zero vector."""


class NegativeCoordinate(InputError):
    """A vector that must lie in N^d has a negative coordinate."""


class DuplicateGenerator(InputError):
    """An affine generator list contains a repeated vector."""


class DimensionMismatch(InputError):
    """Vectors or lattices of different ambient dimensions were combined."""


class NotAMember(InputError):
    """The given element does not belong to the semigroup."""


class BoundTooSmall(InputError):
    """A verification window smaller than the completeness bound was requested."""


class TooManyGenerators(InputError):
    """Partition search guard: more generators than the exponential search allows."""


class InvalidGluing(InputError):
    """The (lambda, mu) data does not define a gluing."""


class InvalidParams(InputError):
    """Family parameters violate their arithmetic constraints."""


class UnsupportedX(InputError):
    """Closed-form interval Betti sets exist only for interval widths 2 and 3."""


class NotMED(InputError):
    """The semigroup does not have maximal embedding dimension."""


class NotInTheoremScope(InputError):
    """The closed form is stated only for multiplicity >= 3; smaller cases must
    use the general algorithm."""


class NotEmbeddingDimension3(InputError):
    """Degenerate parameters collapsed the three intended generators."""


class ArithmeticOverflow(MonoidError):
    """A value left the 64-bit guard range."""


# Values are kept inside signed 64-bit range so results stay portable to
# fixed-width consumers; Python ints themselves never wrap.
INT64_MAX = 2**63 - 1


def check_magnitude(*values: int) -> None:
    for v in values:
        if v > INT64_MAX or v < -INT64_MAX:
            raise ArithmeticOverflow(f"value {v} exceeds the 64-bit guard")
