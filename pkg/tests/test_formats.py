import json

import pytest

from gabidulin.errors import InvalidSpec, ParseError
from gabidulin.fields import QQ
from gabidulin.formats import (
    build_field,
    field_degrees,
    parse_element,
    parse_spec,
    parse_word,
    read_spec,
    read_word,
    serialize_spec,
    serialize_word,
    spec_digest,
    write_word,
)
from gabidulin.presets import cyclotomic_spec
from gabidulin.rank import Word
from gabidulin.registry import Registry, preset_registry

CYCLO5_TEXT = """{
  "version": 1,
  "levels": [{"generator": "z", "min_poly": [1, 1, 1, 1, 1]}],
  "theta_image": [0, 0, 1, 0]
}
"""


def spec_text(**overrides):
    doc = json.loads(CYCLO5_TEXT)
    doc.update(overrides)
    return json.dumps(doc)


class TestSpecFiles:
    def test_parse_and_build(self):
        tower, theta = build_field(parse_spec(CYCLO5_TEXT))
        z = tower.top.gen
        assert tower.degree == 4
        assert theta(z) == z**2
        assert theta.order == 4

    def test_syntax_error_has_position(self):
        with pytest.raises(ParseError) as info:
            parse_spec('{\n  "version": 1,\n  "levels": [}\n')
        assert info.value.line == 3
        assert info.value.column > 0

    @pytest.mark.parametrize(
        "overrides, path",
        [
            ({"version": 2}, "$.version"),
            ({"version": "1"}, "$.version"),
            ({"levels": []}, "$.levels"),
            ({"levels": [{"generator": "z", "min_poly": [1, 0, 2]}]}, "$.levels[0].min_poly[2]"),
            ({"levels": [{"generator": "z", "min_poly": [1, "1/0", 1]}]}, "$.levels[0].min_poly[1]"),
            ({"levels": [{"generator": "", "min_poly": [1, 1]}]}, "$.levels[0].generator"),
            ({"levels": [{"min_poly": [1, 1]}]}, "$.levels[0]"),
            ({"theta_image": [0, 1]}, "$.theta_image"),
            ({"theta_image": [0, 0, True, 0]}, "$.theta_image[2]"),
        ],
    )
    def test_invalid_content_is_located(self, overrides, path):
        with pytest.raises(InvalidSpec) as info:
            parse_spec(spec_text(**overrides))
        assert info.value.path == path
        assert str(info.value).startswith(path)

    def test_missing_theta_image(self):
        doc = json.loads(CYCLO5_TEXT)
        del doc["theta_image"]
        with pytest.raises(InvalidSpec):
            parse_spec(json.dumps(doc))

    def test_image_that_is_not_a_root(self):
        spec = parse_spec(spec_text(theta_image=[1, 1, 0, 0]))
        with pytest.raises(InvalidSpec) as info:
            build_field(spec)
        assert info.value.path == "$.theta_image"

    def test_nested_elements(self):
        assert parse_element([0, [0, "1/2", 0, 0]], [4, 2], "$") == (
            QQ(0),
            (QQ(0), QQ(1, 2), QQ(0), QQ(0)),
        )
        with pytest.raises(InvalidSpec) as info:
            parse_element([0, [0, 1]], [4, 2], "$.x")
        assert info.value.path == "$.x[1]"

    def test_round_trip(self):
        spec = read_spec("preset:kummer")
        again = parse_spec(serialize_spec(spec))
        assert again == spec
        assert spec_digest(again) == spec_digest(spec)

    def test_digest_distinguishes_towers(self):
        digests = {spec_digest(read_spec(f"preset:{name}")) for name in preset_registry.names()}
        assert len(digests) == len(preset_registry.names())
        assert all(len(d) == 64 for d in digests)

    def test_read_from_file(self, tmp_path):
        path = tmp_path / "cyclo5.json"
        path.write_text(CYCLO5_TEXT)
        assert read_spec(path) == read_spec("preset:cyclotomic-5")


class TestPresets:
    def test_builtin_names(self):
        for name in ("roots8", "kummer", "cyclotomic-5", "cyclotomic-7", "cyclotomic-11"):
            assert name in preset_registry

    def test_unknown_preset(self):
        with pytest.raises(InvalidSpec, match="unknown preset"):
            read_spec("preset:nope")

    @pytest.mark.parametrize("p, exponent", [(5, 2), (7, 3), (11, 2)])
    def test_cyclotomic_image_is_primitive_root_power(self, p, exponent):
        image = cyclotomic_spec(p)["theta_image"]
        assert len(image) == p - 1
        assert image.index(1) == exponent
        assert sum(image) == 1

    def test_presets_are_independent_copies(self):
        first = preset_registry.build("roots8")
        first["theta_image"][0] = 99
        assert preset_registry.build("roots8")["theta_image"][0] == 0

    def test_registry_decorator_and_lookup(self):
        registry = Registry("widget")

        @registry.register("w")
        def build_w():
            return 1

        assert registry.build("w") == 1
        assert registry.names() == ["w"]
        with pytest.raises(KeyError, match="available: w"):
            registry.get("missing")


class TestWordFiles:
    def test_word_round_trip(self, cyclo5, tmp_path):
        tower, _ = cyclo5
        z = tower.top.gen
        word = Word(tower.top, [QQ(1, 2), z, 0, -(z**3)])
        text = serialize_word(word)
        assert json.loads(text)["entries"][0] == ["1/2", 0, 0, 0]
        assert parse_word(text, tower.top) == word
        path = tmp_path / "word.json"
        write_word(path, word)
        assert read_word(path, tower.top) == word

    def test_bare_rationals_are_constants(self, cyclo5):
        tower, _ = cyclo5
        word = parse_word('{"version": 1, "entries": [3, "-1/2"]}', tower.top)
        assert list(word) == [3, QQ(-1, 2)]

    def test_nested_word_over_two_levels(self, kummer):
        tower, _ = kummer
        assert field_degrees(tower.top) == [4, 8]
        h, a = tower.generator(1), tower.generator()
        word = Word(tower.top, [h * a, 1])
        text = serialize_word(word)
        assert json.loads(text)["entries"][0][1] == [0, 1, 0, 0]
        assert parse_word(text, tower.top) == word

    def test_wrong_coordinate_count(self, kummer):
        tower, _ = kummer
        with pytest.raises(InvalidSpec) as info:
            parse_word('{"version": 1, "entries": [[1, 2]]}', tower.top)
        assert info.value.path == "$.entries[0]"
