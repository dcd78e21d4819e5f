"""Exception hierarchy shared by every module of the package."""


class HillError(ValueError):
    """Base class for domain errors (bad keys, blocks, permutations)."""


class NotInvertible(HillError):
    def __init__(self, gcd, modulus, what="value"):
        self.gcd = gcd
        self.modulus = modulus
        super().__init__(f"{what} is not invertible mod {modulus} (gcd={gcd})")


class DimensionMismatch(HillError):
    pass


class BadLength(HillError):
    pass


class NonAsciiCharacter(HillError):
    def __init__(self, position, char):
        self.position = position
        self.char = char
        super().__init__(f"character {char!r} at position {position} is not 7-bit ASCII")


class InvalidPermutation(HillError):
    pass


class LengthMismatch(HillError):
    pass


class OddOrder(HillError):
    pass


class MissingPermutation(HillError):
    pass


class ConfigError(HillError):
    pass


class BoundTooSmall(HillError):
    pass


class InvalidIndices(HillError):
    pass
