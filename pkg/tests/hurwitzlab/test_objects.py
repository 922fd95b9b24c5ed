import pytest

from hurwitzlab.exceptions import HurwitzLabError, HurwitzLabValidationError
from hurwitzlab.fields import DictField, IntField, ListField, StrField, TypeTagField
from hurwitzlab.objects import HurwitzObject, Object


def test_object_populates_new_instance_on_init():
    class WindowObj(HurwitzObject):
        window = IntField()
        type_tag = StrField(attr="type")

    obj = WindowObj({"window": 2, "type": "D4"})

    assert isinstance(obj.instance, Object)
    assert obj.instance.window == 2
    assert obj.instance.type_tag == "D4"
    with pytest.raises(AttributeError):
        obj.instance.type

    assert obj.window == 2
    assert obj.type_tag == "D4"
    with pytest.raises(AttributeError):
        obj.type


def test_object_populates_new_instance_on_init_with_default_values_if_missing():
    class WindowObj(HurwitzObject):
        window = IntField(default=2)
        type_tag = StrField(attr="type", default="E8")

    obj = WindowObj()
    assert obj.window == 2
    assert obj.type_tag == "E8"


def test_object_prefers_data_over_instance_and_instance_over_default():
    class WindowObj(HurwitzObject):
        window = IntField(default=2)
        cap = IntField(default=10)

    instance = Object()
    instance.window = 3
    instance.cap = 7

    obj = WindowObj({"cap": 99}, instance=instance)
    assert obj.window == 3
    assert obj.cap == 99


def test_objects_setter_sets_value_directly_on_instance_and_resets_validation():
    class WindowObj(HurwitzObject):
        window = IntField()

    obj = WindowObj({"window": 1})
    assert obj.is_valid()

    obj.window = 5
    assert obj.instance.window == 5
    with pytest.raises(HurwitzLabError):
        obj.to_dict()


def test_object_to_dict_raises_if_is_valid_has_not_been_run():
    class WindowObj(HurwitzObject):
        window = IntField()

    obj = WindowObj({"window": 2})
    with pytest.raises(HurwitzLabError) as e:
        obj.to_dict()

    assert str(e.value) == "Data is invalid or `.is_valid()` has not been run"


def test_object_to_dict_raises_if_validation_failed():
    class WindowObj(HurwitzObject):
        window = IntField()

    obj = WindowObj({"window": "2"})
    assert obj.is_valid() is False
    assert list(obj.errors) == ["window"]
    with pytest.raises(HurwitzLabError) as e:
        obj.to_dict()

    assert str(e.value) == "Data is invalid or `.is_valid()` has not been run"


def test_object_collects_one_message_per_failing_field():
    class RunObj(HurwitzObject):
        window = IntField(min_value=0)
        type_tag = TypeTagField(attr="type")

    obj = RunObj({"window": -1, "type": "Q7"})
    assert obj.is_valid() is False
    assert obj.errors == {
        "window": ["Must be at least 0."],
        "type_tag": ["Unknown root system type Q7."],
    }


def test_object_skips_optional_fields_without_value():
    class RunObj(HurwitzObject):
        m = IntField(min_value=0, required=False)

    obj = RunObj({})
    assert obj.is_valid()
    assert obj.to_dict() == {"m": None}


def test_object_runs_validate_hooks_after_field_validators():
    class RunObj(HurwitzObject):
        window = IntField()

        def validate_window(self, value):
            if value % 2:
                raise HurwitzLabValidationError("Window must be even.")

    assert RunObj({"window": 2}).is_valid()
    obj = RunObj({"window": 3})
    assert obj.is_valid() is False
    assert obj.errors == {"window": ["Window must be even."]}


def test_object_validated_raises_collected_errors():
    class RunObj(HurwitzObject):
        window = IntField()

    with pytest.raises(HurwitzLabValidationError) as e:
        RunObj({"window": None}).validated()

    assert e.value.messages == {"window": ["This field is required"]}
    assert e.value.field_names == ["window"]


def test_object_to_dict_returns_correct_data():
    class WindowObj(HurwitzObject):
        window = IntField()

    obj = WindowObj({"window": 2})
    assert obj.is_valid()
    assert obj.to_dict() == {"window": 2}


def test_object_to_dict_respects_field_label():
    class WindowObj(HurwitzObject):
        window = IntField(label="radical window")

    obj = WindowObj({"window": 2})
    assert obj.is_valid()
    assert obj.to_dict() == {"radical window": 2}


def test_object_inherits_fields_from_base_classes():
    class BaseObj(HurwitzObject):
        window = IntField(default=2)

    class ChildObj(BaseObj):
        cap = IntField(default=5)

    obj = ChildObj()
    assert obj.is_valid()
    assert obj.to_dict() == {"window": 2, "cap": 5}


def test_object_with_dict_field_default_is_immutable_between_objects():
    class ResultObj(HurwitzObject):
        results = DictField()

    obj1 = ResultObj()
    obj2 = ResultObj()
    obj1.results["orbits"] = 1
    assert obj1.results == {"orbits": 1}
    assert obj2.results == {}


def test_object_with_list_field_default_is_immutable_between_objects():
    class WordObj(HurwitzObject):
        word = ListField()

    obj1 = WordObj()
    obj2 = WordObj()
    obj1.word.append(5)
    assert obj1.word == [5]
    assert obj2.word == []
