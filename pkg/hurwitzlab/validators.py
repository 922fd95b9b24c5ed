import re

from .exceptions import HurwitzLabValidationError

__all__ = [
    'Validator', 'Required', 'Range', 'Length', 'OneOf', 'OneOfType', 'TypeTag', 'IntMatrix',
]


class Validator(object):
    """Base class for validators.
    """
    def __repr__(self):
        args = self._repr_args()
        args = '{0}, '.format(args) if args else ''

        return (
            '<{self.__class__.__name__}({args}message={self.message!r})>'
            .format(self=self, args=args)
        )

    def _repr_args(self):
        return ''


class Required(Validator):
    """Validates if value is set.

    Zero, ``False`` and empty containers are legitimate values here; only ``None`` is missing.
    """
    default_message = 'This field is required'

    def __init__(self, message=None):
        self.message = message or self.default_message

    def _format_error(self, value):
        return self.message

    def __call__(self, value):
        if value is None:
            raise HurwitzLabValidationError(self._format_error(value))
        return value


class Range(Validator):
    """Validates if a number lies in a closed range. Either bound may be omitted.
    """
    message_min = 'Must be at least {min}.'
    message_max = 'Must be at most {max}.'

    def __init__(self, min=None, max=None, message=None):
        self.min = min
        self.max = max
        self.message = message

    def _repr_args(self):
        return 'min={0!r}, max={1!r}'.format(self.min, self.max)

    def _format_error(self, value, message):
        return (self.message or message).format(input=value, min=self.min, max=self.max)

    def __call__(self, value):
        if self.min is not None and value < self.min:
            raise HurwitzLabValidationError(self._format_error(value, self.message_min))
        if self.max is not None and value > self.max:
            raise HurwitzLabValidationError(self._format_error(value, self.message_max))
        return value


class Length(Validator):
    """Validates if value is correct size.
    """
    message_min = 'Shorter than minimum length {min_length}.'
    message_max = 'Longer than maximum length {max_length}.'
    message_equal = 'Length must be {equal}.'

    def __init__(self, min_length=None, max_length=None, message=None, equal=None):
        if equal is not None and any([min_length, max_length]):
            raise ValueError(
                'The `equal` parameter was provided, maximum or '
                'minimum parameter must not be provided.',
            )

        self.min_length = min_length
        self.max_length = max_length
        self.message = message
        self.equal = equal

    def _repr_args(self):
        return 'min_length={0!r}, max_length={1!r}, equal={2!r}'.format(
            self.min_length, self.max_length, self.equal)

    def _format_error(self, value, message):
        return (self.message or message).format(
            input=value, min_length=self.min_length, max_length=self.max_length,
            equal=self.equal,
        )

    def __call__(self, value):
        length = len(value)

        if self.equal is not None:
            if length != self.equal:
                raise HurwitzLabValidationError(self._format_error(value, self.message_equal))
            return value

        if self.min_length is not None and length < self.min_length:
            raise HurwitzLabValidationError(self._format_error(value, self.message_min))

        if self.max_length is not None and length > self.max_length:
            raise HurwitzLabValidationError(self._format_error(value, self.message_max))

        return value


class OneOf(Validator):
    """Validates if the value is one of the choices.
    """
    default_message = 'Value {input} must be one of {choices}.'

    def __init__(self, choices, message=None):
        self.choices = choices
        self.choices_text = ', '.join(str(choice) for choice in self.choices)
        self.message = message or self.default_message

    def _repr_args(self):
        return 'choices={0!r}'.format(self.choices)

    def _format_error(self, value):
        return self.message.format(input=value, choices=self.choices_text)

    def __call__(self, value):
        try:
            if value not in self.choices:
                raise HurwitzLabValidationError(self._format_error(value))
        except TypeError:
            raise HurwitzLabValidationError(self._format_error(value))

        return value


class OneOfType(Validator):
    """Validates if value type is one of the choices.

    ``bool`` is not accepted where only ``int`` is.
    """
    default_message = 'Value {input} of type {input_type} must be one of {choices} type'

    def __init__(self, choices, message=None):
        self.choices = choices
        self.choices_text = ', '.join(choice.__name__ for choice in self.choices)
        self.message = message or self.default_message

    def _repr_args(self):
        return 'choices={0!r}'.format(self.choices)

    def _format_error(self, value):
        return self.message.format(
            input=value,
            input_type=type(value).__name__,
            choices=self.choices_text,
        )

    def __call__(self, value):
        if isinstance(value, bool) and bool not in self.choices:
            raise HurwitzLabValidationError(self._format_error(value))
        if not isinstance(value, self.choices):
            raise HurwitzLabValidationError(self._format_error(value))
        return value


class TypeTag(Validator):
    """Validates a root system type tag such as ``A3``, ``D5``, ``E8``, ``F4`` or ``E6.1.1``.

    :param bool elliptic: Accept only the four tubular elliptic types.
    """
    TAG_REGEX = re.compile(r'^([ADEF])_?(\d+)(?:\.1\.1|\(1,1\))?$', re.IGNORECASE)

    default_message = 'Unknown root system type {input}.'

    def __init__(self, elliptic=False, message=None):
        self.elliptic = elliptic
        self.message = message or self.default_message

    def _repr_args(self):
        return 'elliptic={0!r}'.format(self.elliptic)

    @classmethod
    def normalize(cls, value):
        """Returns ``(letter, rank)`` or ``None`` when ``value`` is not a known tag.
        """
        if not isinstance(value, str):
            return None
        match = cls.TAG_REGEX.match(value.strip())
        if not match:
            return None
        letter, rank = match.group(1).upper(), int(match.group(2))
        if letter == 'A' and rank >= 1:
            return letter, rank
        if letter == 'D' and rank >= 4:
            return letter, rank
        if letter == 'E' and rank in (6, 7, 8):
            return letter, rank
        if letter == 'F' and rank == 4:
            return letter, rank
        return None

    def __call__(self, value):
        parsed = self.normalize(value)
        if parsed is None:
            raise HurwitzLabValidationError(self.message.format(input=value))
        if self.elliptic and parsed not in {('D', 4), ('E', 6), ('E', 7), ('E', 8)}:
            raise HurwitzLabValidationError(
                'Type {0} has no tubular elliptic form.'.format(value))
        return value


class IntMatrix(Validator):
    """Validates a nested list of integers with the given shape.
    """
    default_message = 'Expected a {rows}x{cols} integer matrix, got {input}.'

    def __init__(self, rows=None, cols=None, message=None):
        self.rows = rows
        self.cols = cols
        self.message = message or self.default_message

    def _repr_args(self):
        return 'rows={0!r}, cols={1!r}'.format(self.rows, self.cols)

    def _format_error(self, value):
        return self.message.format(input=value, rows=self.rows or 'n', cols=self.cols or 'm')

    def __call__(self, value):
        if not isinstance(value, (list, tuple)) or not value:
            raise HurwitzLabValidationError(self._format_error(value))
        if self.rows is not None and len(value) != self.rows:
            raise HurwitzLabValidationError(self._format_error(value))
        width = self.cols if self.cols is not None else len(value[0])
        for row in value:
            if not isinstance(row, (list, tuple)) or len(row) != width:
                raise HurwitzLabValidationError(self._format_error(value))
            if any(isinstance(x, bool) or not isinstance(x, int) for x in row):
                raise HurwitzLabValidationError(self._format_error(value))
        return value
