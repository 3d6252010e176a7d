"""Exception types raised by the engine."""


class GlobalKError(Exception):
    pass


class OrderCapExceeded(GlobalKError):
    pass


class SizeCapExceeded(GlobalKError):
    pass


class DimCapExceeded(GlobalKError):
    pass


class BadSelector(GlobalKError):
    pass


class GroupMismatch(GlobalKError):
    pass


class NotRightFree(GlobalKError):
    pass


class WindowMiss(GlobalKError):
    pass


class WindowTooSmall(GlobalKError):
    pass


class NonUniqueDecomposition(GlobalKError):
    pass


class NonCancellative(GlobalKError):
    pass


class ImagesOverlap(GlobalKError):
    pass
