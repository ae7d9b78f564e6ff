"""Exception types raised across the package."""


class LoopforgeError(Exception):
    pass


class ShapeError(LoopforgeError, ValueError):
    pass


class LatinViolation(LoopforgeError, ValueError):
    """A row or column of a Cayley table repeats a symbol."""

    def __init__(self, axis, index, symbol):
        self.axis = axis
        self.index = index
        self.symbol = symbol
        super().__init__(f"{axis} {index} repeats symbol {symbol}")


class DegreeMismatch(LoopforgeError, ValueError):
    pass


class NotALoop(LoopforgeError, ValueError):
    pass


class NotAnIsotopism(LoopforgeError, ValueError):
    pass


class NotWeakInverse(LoopforgeError, ValueError):
    def __init__(self, perm):
        self.perm = perm
        super().__init__(f"{perm!r} is not a weak inverse permutation")


class NotCommuting(LoopforgeError, ValueError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"generators {pair[0]!r} and {pair[1]!r} do not commute")


class OrderTooLarge(LoopforgeError, ValueError):
    pass


class GenerationFailure(LoopforgeError, RuntimeError):
    pass


class UnknownClaim(LoopforgeError, KeyError):
    pass
