__all__ = [
    'HurwitzLabError',
    'HurwitzLabValidationError',
    'MalformedDiagramError',
    'DimensionMismatchError',
    'NonRootError',
    'UnsupportedTypeError',
    'NotOrthogonalError',
    'CapExceededError',
    'BraidIndexError',
    'NotTranslationError',
    'SplittingError',
    'FiberMismatchError',
    'NonIntegralTransporterError',
    'NotStabilizingError',
    'ShapeNotFoundError',
    'UnknownFormatError',
    'DataFileError',
]


class HurwitzLabError(Exception):
    """Base hurwitzlab exception.
    """


class HurwitzLabValidationError(HurwitzLabError):
    """Exception used for validating values.
    """
    def __init__(self, message, field_names=None, data=None, valid_data=None, **kwargs):
        if not isinstance(message, (dict, list)):
            self.messages = [message]
        else:
            self.messages = message

        if isinstance(field_names, str):
            self.field_names = [field_names]
        else:
            self.field_names = field_names or []

        self.data = data
        self.valid_data = valid_data
        self.kwargs = kwargs
        HurwitzLabError.__init__(self, message)


class MalformedDiagramError(HurwitzLabError):
    """Diagram has a self edge, a duplicate edge, an unknown edge kind or duplicate labels.
    """


class DimensionMismatchError(HurwitzLabError):
    pass


class NonRootError(HurwitzLabError):
    """Vector used as a reflection root does not have a root norm.
    """


class UnsupportedTypeError(HurwitzLabError):
    pass


class NotOrthogonalError(HurwitzLabError):
    """Matrix does not preserve the Gram form.
    """


class CapExceededError(HurwitzLabError):
    """A resource cap was hit. ``count`` holds what was produced before stopping.
    """
    def __init__(self, message, count=0):
        self.count = count
        HurwitzLabError.__init__(self, message)


class BraidIndexError(HurwitzLabError):
    pass


class NotTranslationError(HurwitzLabError):
    """Element does not induce the identity on the finite quotient.
    """


class SplittingError(HurwitzLabError):
    """Change of basis does not block-diagonalize the Coxeter transformation.
    """


class FiberMismatchError(HurwitzLabError):
    """Tuples do not project to the same finite tuple.
    """


class NonIntegralTransporterError(HurwitzLabError):
    pass


class NotStabilizingError(HurwitzLabError):
    """Braid does not stabilize the projected tuple.
    """


class ShapeNotFoundError(HurwitzLabError):
    """Orbit search ended without reaching the requested tuple shape.
    """
    def __init__(self, message, exhausted=False, count=0):
        self.exhausted = exhausted
        self.count = count
        HurwitzLabError.__init__(self, message)


class UnknownFormatError(HurwitzLabError):
    pass


class DataFileError(HurwitzLabError):
    pass
