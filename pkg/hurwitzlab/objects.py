import operator
from collections import defaultdict

from .exceptions import HurwitzLabError, HurwitzLabValidationError
from .fields import Field

__all__ = ['Object', 'HurwitzObjectMeta', 'HurwitzObject']


class Object(object):
    pass


def _compile_field(field, name, object_cls):
    getter = field.as_getter(name, object_cls)
    if getter is None:
        getter = operator.itemgetter(field.attr or name)

    field.name = name
    field._getter = getter
    return field


class HurwitzObjectMeta(type):
    @staticmethod
    def _get_fields_from_base_classes(object_cls):
        fields = []
        for cls in object_cls.__mro__[:0:-1]:
            if isinstance(cls, HurwitzObjectMeta):
                fields += [f for f in cls._fields if f not in fields]
        return fields

    def __new__(cls, name, bases, attrs):
        direct_fields = {}
        for attr_name, field in list(attrs.items()):
            if isinstance(field, Field):
                direct_fields[attr_name] = field
                del attrs[attr_name]

        real_cls = super().__new__(cls, name, bases, attrs)
        compiled = [
            _compile_field(field, field_name, real_cls)
            for field_name, field in direct_fields.items()
        ]
        inherited = [
            f for f in cls._get_fields_from_base_classes(real_cls) if f.name not in direct_fields
        ]

        real_cls._fields = inherited + compiled
        real_cls._field_names = [field.name for field in real_cls._fields]
        return real_cls


class HurwitzObject(metaclass=HurwitzObjectMeta):
    """Base class for declarative schemas.

    A schema is defined by subclassing ``HurwitzObject`` and adding each Field as a class variable.
    Values are read from ``data`` (a mapping), falling back to ``instance`` attributes and then
    to field defaults.

    Example:

    .. code-block:: python

        class WindowConfig(HurwitzObject):
            type_tag = TypeTagField(attr='type', elliptic=True)
            window = IntField(min_value=0, default=2)

        config = WindowConfig({'type': 'D4'})
        config.is_valid()
        config.to_dict()
    """

    _fields = []
    _field_names = []

    def __init__(self, data=None, instance=None):
        self.instance = instance if instance is not None else Object()
        self._data = data
        self._validation_successful = False
        self.errors = {}

        self._populate_instance()

    def __getattribute__(self, name):
        if name not in {'_field_names', 'instance'} and name in self._field_names:
            return getattr(self.instance, name)
        return super().__getattribute__(name)

    def __setattr__(self, name, value):
        if name in self._field_names:
            setattr(self.instance, name, value)
            super().__setattr__('_validation_successful', False)
        else:
            super().__setattr__(name, value)

    def _populate_instance(self):
        for field in self._fields:
            value = None
            if self._data:
                try:
                    value = field._getter(self._data)
                except KeyError:
                    pass

            if value is None:
                value = getattr(self.instance, field.name, None)

            if value is None:
                value = field.default

            setattr(self.instance, field.name, value)

    def _validate(self):
        errors = defaultdict(list)
        for field in self._fields:
            field_value = getattr(self.instance, field.name)
            if field_value is None and not field.required:
                continue
            failed = False
            for validator in field.validators:
                try:
                    validator(field_value)
                except HurwitzLabValidationError as e:
                    errors[field.name] += e.messages
                    failed = True
                    break
            if failed:
                continue

            validate_func = getattr(self, 'validate_{0}'.format(field.name), None)
            if validate_func is not None:
                try:
                    validate_func(field_value)
                except HurwitzLabValidationError as e:
                    errors[field.name] += e.messages

        return dict(errors)

    def is_valid(self):
        """Checks whether data passes validation.

        Returns True if all validations were successful on all fields, otherwise returns False and
        fills ``errors`` with messages keyed by field name.
        """
        self.errors = self._validate()
        self._validation_successful = not self.errors
        return self._validation_successful

    def validated(self):
        """Returns ``self`` after a successful ``is_valid``, raises the collected errors otherwise.
        """
        if not self.is_valid():
            raise HurwitzLabValidationError(self.errors, field_names=sorted(self.errors))
        return self

    def to_dict(self):
        if not self._validation_successful:
            raise HurwitzLabError('Data is invalid or `.is_valid()` has not been run')
        data = {}
        for field in self._fields:
            value = getattr(self.instance, field.name)
            if value is not None:
                value = field.to_json_value(value)
            data[field.label or field.name] = value
        return data
