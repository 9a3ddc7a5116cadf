"""Exception hierarchy.  Every error raised on bad input derives from ``WRTwistError``."""


class WRTwistError(ValueError):
    pass


class NotSquareFree(WRTwistError):
    pass


class TooSmall(WRTwistError):
    pass


class TooLarge(WRTwistError):
    pass


class NotAnIdeal(WRTwistError):
    pass


class ZeroElement(WRTwistError):
    pass


class NotInIdeal(WRTwistError):
    pass


class NotPrimitive(WRTwistError):
    pass


class NotGoodBasis(WRTwistError):
    pass


class NotTwistable(WRTwistError):
    pass


class OutOfRange(WRTwistError):
    pass


class DegenerateBasis(WRTwistError):
    pass


class EvenC(WRTwistError):
    pass


class COne(WRTwistError):
    pass
