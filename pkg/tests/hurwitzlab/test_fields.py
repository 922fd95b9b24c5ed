import pytest

from hurwitzlab import validators as hl_validators
from hurwitzlab.exceptions import HurwitzLabValidationError
from hurwitzlab.fields import (
    BraidWordField, DictField, Field, IntField, ListField, MatrixField, StrField, TypeTagField,
)


@pytest.mark.parametrize("value,expected", [(5, 5), ("a", "a"), (None, None)])
def test_field_to_json_value_returns_unmodified_value(value, expected):
    assert Field().to_json_value(value) == expected


def test_field_as_getter_returns_none():
    assert Field().as_getter(None, None) is None


def test_field_required_adds_validators():
    validators = Field(required=True).validators
    assert len(validators) == 1
    assert isinstance(validators[0], hl_validators.Required)


def test_optional_field_has_no_type_check():
    assert StrField(required=False).validators == []


def test_accepted_types_field_has_one_of_type_validator():
    class AcceptedTypesField(Field):
        accepted_types = (str,)

    validators = AcceptedTypesField().validators
    assert len(validators) == 2
    assert isinstance(validators[0], hl_validators.Required)
    assert isinstance(validators[1], hl_validators.OneOfType)
    assert validators[1].choices == (str,)


def test_str_field_adds_min_length_validator():
    validators = StrField(min_length=1).validators
    assert len(validators) == 3
    assert isinstance(validators[2], hl_validators.Length)
    assert validators[2].min_length == 1


def test_str_field_adds_one_of_validator_if_choices_are_set():
    validators = StrField(choices=["json", "dot"]).validators
    assert len(validators) == 3
    assert isinstance(validators[2], hl_validators.OneOf)
    assert validators[2].choices == ["json", "dot"]


def test_int_field_adds_range_validator():
    validators = IntField(min_value=0, max_value=3).validators
    assert len(validators) == 3
    assert isinstance(validators[2], hl_validators.Range)
    assert (validators[2].min, validators[2].max) == (0, 3)


def test_container_fields_return_fresh_defaults():
    assert DictField().default == {}
    assert DictField().default is not DictField().default
    field = ListField()
    assert field.default is not field.default


def test_list_field_serializes_tuples_as_lists():
    assert ListField().to_json_value((1, 2)) == [1, 2]


def test_matrix_field_checks_shape_and_serializes_rows():
    field = MatrixField(rows=2, cols=2)
    assert isinstance(field.validators[-1], hl_validators.IntMatrix)
    assert field.to_json_value(((1, 0), (2, 1))) == [[1, 0], [2, 1]]


@pytest.mark.parametrize("word", [[1, -2, 3], [], [7]])
def test_braid_word_field_accepts_nonzero_letters(word):
    for validator in BraidWordField().validators:
        validator(word)


@pytest.mark.parametrize("letter", [0, True, "1", 1.0])
def test_braid_word_field_rejects_bad_letters(letter):
    with pytest.raises(HurwitzLabValidationError) as e:
        BraidWordField().validators[-1]([1, letter])

    assert "Braid letters must be nonzero integers" in str(e.value)


def test_type_tag_field_adds_type_tag_validator():
    field = TypeTagField(elliptic=True)
    assert isinstance(field.validators[-1], hl_validators.TypeTag)
    assert field.validators[-1].elliptic is True
