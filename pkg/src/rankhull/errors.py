"""Exception hierarchy shared by every module of the package."""


class RankHullError(Exception):
    """Base class for all errors raised by rankhull."""


# field construction / arithmetic
class NonPrimeP(RankHullError):
    pass


class ReducibleModulus(RankHullError):
    def __init__(self, name: str, coeffs):
        self.name = name
        self.coeffs = list(coeffs)
        super().__init__(f"{name} {self.coeffs} is reducible")


class NotInBaseField(RankHullError):
    pass


# linear algebra
class NotABasis(RankHullError):
    pass


class DimensionMismatch(RankHullError):
    pass


class NotInvertible(RankHullError):
    pass


class NotOverSubfield(RankHullError):
    pass


# codes
class TooLargeToEnumerate(RankHullError):
    def __init__(self, required: int, cap: int):
        self.required = required
        self.cap = cap
        super().__init__(f"enumeration needs {required} items, cap is {cap}")


# constructions
class InvalidStep(RankHullError):
    pass


class InvalidK(RankHullError):
    pass


class InvalidEll(RankHullError):
    pass


class ZeroLambda(RankHullError):
    pass


class NotSymmetric(RankHullError):
    pass


class Degenerate(RankHullError):
    pass


class NotOrthonormalizable(RankHullError):
    pass


class ExcludedParameters(RankHullError):
    pass


# hull variation
class AllOnesHullBinary(RankHullError):
    pass


class UnsupportedShape(RankHullError):
    pass


class AlreadyLCD(RankHullError):
    pass


class Obstructed22(RankHullError):
    def __init__(self, msg: str = ""):
        super().__init__(
            msg
            or "Hermitian hull variation is not available for (q, n) = (2, 2): "
            "the code K(1, w) over F4 has hull dimension 1 under every element of GL_2(F_2)"
        )


class TargetAboveHull(RankHullError):
    pass


# oracles
class GroupTooLarge(RankHullError):
    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"|GL_n(F_q)| = {size} exceeds cap {cap}")


class WrongParameters(RankHullError):
    pass


class OddCharacteristic(RankHullError):
    pass
