from . import validators as hl_validators
from .exceptions import HurwitzLabValidationError

__all__ = [
    'Field', 'StrField', 'IntField', 'BoolField', 'DictField', 'ListField', 'MatrixField',
    'BraidWordField', 'TypeTagField',
]


class Field(object):
    """:class:`Field` describes one entry of a schema object and the checks applied to it.

    :param str attr: The key to read from the input mapping. If this is not supplied, the name
        this field was assigned to on the schema will be used.
    :param str label: Key used in ``to_dict`` output instead of the attribute name.
    :param bool required: Whether the field is required. Required fields also get a type check.
    :param list validators: Validators run when calling ``.is_valid()`` on the schema.
    :param default: Value used when the input does not provide one.
    """

    accepted_types = None

    def __init__(self, attr=None, label=None, required=True, validators=None, default=None):
        self.attr = attr
        self.label = label
        self.required = required
        self.validators = list(validators or [])
        self._default = default

        if required:
            self.validators.insert(0, hl_validators.Required())
            if self.accepted_types:
                self.validators.insert(1, hl_validators.OneOfType(choices=self.accepted_types))

    @property
    def default(self):
        """Default value. Fields with mutable defaults override this and return a fresh object.
        """
        return self._default

    def to_json_value(self, value):
        return value

    def as_getter(self, field_name, object_cls):
        """Returns a function reading this field from input data, or ``None`` for the default
        key lookup.
        """
        return None


class StrField(Field):
    """String value.

    :param int max_length: Adds a :class:`~hurwitzlab.validators.Length` check.
    :param int min_length: Adds a :class:`~hurwitzlab.validators.Length` check.
    :param list choices: Adds a :class:`~hurwitzlab.validators.OneOf` check.
    """

    accepted_types = (str,)

    def __init__(self, **kwargs):
        self.max_length = kwargs.pop('max_length', None)
        self.min_length = kwargs.pop('min_length', None)
        self.choices = kwargs.pop('choices', None)
        super().__init__(**kwargs)

        if self.max_length is not None or self.min_length is not None:
            self.validators.append(
                hl_validators.Length(min_length=self.min_length, max_length=self.max_length)
            )
        if self.choices is not None:
            self.validators.append(hl_validators.OneOf(choices=self.choices))


class IntField(Field):
    """Integer value, optionally bounded with ``min_value`` and ``max_value``.
    """

    accepted_types = (int,)

    def __init__(self, **kwargs):
        self.min_value = kwargs.pop('min_value', None)
        self.max_value = kwargs.pop('max_value', None)
        super().__init__(**kwargs)

        if self.min_value is not None or self.max_value is not None:
            self.validators.append(hl_validators.Range(min=self.min_value, max=self.max_value))


class BoolField(Field):
    accepted_types = (bool,)


class DictField(Field):
    accepted_types = (dict,)

    @property
    def default(self):
        return {}


class ListField(Field):
    accepted_types = (list, tuple)

    def to_json_value(self, value):
        return list(value)

    @property
    def default(self):
        return []


class MatrixField(Field):
    """Integer matrix given as nested lists. ``to_json_value`` returns lists of lists.
    """

    accepted_types = (list, tuple)

    def __init__(self, rows=None, cols=None, **kwargs):
        super().__init__(**kwargs)
        self.validators.append(hl_validators.IntMatrix(rows=rows, cols=cols))

    def to_json_value(self, value):
        return [list(row) for row in value]


class BraidWordField(ListField):
    """Braid word as a list of nonzero signed generator indices.
    """

    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        self.validators.append(_nonzero_letters)


class TypeTagField(StrField):
    def __init__(self, elliptic=False, **kwargs):
        super().__init__(**kwargs)
        self.validators.append(hl_validators.TypeTag(elliptic=elliptic))


def _nonzero_letters(value):
    for letter in value:
        if isinstance(letter, bool) or not isinstance(letter, int) or letter == 0:
            raise HurwitzLabValidationError(
                'Braid letters must be nonzero integers, got {0!r}.'.format(letter))
    return value
