"""
Reading and writing spec and word files (JSON, format version 1).

Spec file::

    {"version": 1,
     "levels": [{"generator": "h", "min_poly": [1, 0, 0, 0, 1]}, ...],
     "theta_image": <element of the top level>}

Word file::

    {"version": 1, "entries": [<element>, ...]}

A rational is a JSON integer or a string ``"p/q"``. An element of level i is a
list of exactly ``deg_i`` elements of level i-1; a bare rational is accepted
anywhere and embedded as a constant. Polynomial coefficients run lowest degree
first and end with the leading coefficient 1. Words are always written in the
fully nested form; parsing a written file gives back the same values.
"""

import hashlib
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple, Union

from . import presets  # noqa: F401  registers the built-in towers
from .automorphism import Automorphism
from .constants import FORMAT_VERSION, PRESET_PREFIX
from .errors import InvalidAutomorphism, InvalidSpec, InvalidTower, ParseError
from .fields import QQ, ExtensionField, FieldElement, FieldTower, Rational
from .fields import parse_rational as _parse_rational_text
from .models import FieldSpec, LevelSpec
from .rank import Word
from .registry import preset_registry

logger = logging.getLogger(__name__)

SpecSource = Union[str, Path]


def load_json(text: str) -> Any:
    """Parse JSON text, reporting syntax errors with line and column."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from e


def parse_rational(value: Any, path: str) -> Rational:
    if isinstance(value, bool):
        raise InvalidSpec(f"expected a rational, got {json.dumps(value)}", path)
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, str):
        try:
            return _parse_rational_text(value)
        except (ValueError, ZeroDivisionError):
            raise InvalidSpec(f"malformed rational {value!r}", path) from None
    raise InvalidSpec(f"expected an integer or a 'p/q' string, got {json.dumps(value)}", path)


def parse_element(value: Any, degrees: Sequence[int], path: str) -> Any:
    """Validate an element against the level degrees ``[deg_1, ..., deg_i]``.

    Returns a rational or a nested tuple of rationals with exact lengths.
    """
    if not degrees or not isinstance(value, list):
        return parse_rational(value, path)
    degree = degrees[-1]
    if len(value) != degree:
        raise InvalidSpec(f"expected {degree} coordinates, got {len(value)}", path)
    return tuple(parse_element(c, degrees[:-1], f"{path}[{i}]") for i, c in enumerate(value))


def to_json(value: Any) -> Any:
    """Canonical JSON form of a rational, a field element or a nested sequence."""
    if isinstance(value, FieldElement):
        return [to_json(c) for c in value.coords]
    if isinstance(value, (list, tuple)):
        return [to_json(c) for c in value]
    value = QQ.convert(value) if not isinstance(value, Rational) else value
    numerator, denominator = int(value.numerator), int(value.denominator)
    if denominator == 1:
        return numerator
    return f"{numerator}/{denominator}"


def _is_one(value: Any) -> bool:
    if isinstance(value, tuple):
        return _is_one(value[0]) and not any(_is_nonzero(c) for c in value[1:])
    return value == 1


def _is_nonzero(value: Any) -> bool:
    if isinstance(value, tuple):
        return any(_is_nonzero(c) for c in value)
    return bool(value)


def _require(data: Dict[str, Any], key: str, kind: type, path: str) -> Any:
    if key not in data:
        raise InvalidSpec(f"missing key {key!r}", path)
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise InvalidSpec(f"{key!r} must be a {kind.__name__}", f"{path}.{key}")
    return value


def _check_version(data: Any) -> None:
    if not isinstance(data, dict):
        raise InvalidSpec("top level must be an object")
    version = _require(data, "version", int, "$")
    if version != FORMAT_VERSION:
        raise InvalidSpec(f"unsupported format version {version}", "$.version")


def spec_from_dict(data: Any) -> FieldSpec:
    """Validate a decoded spec document."""
    _check_version(data)
    levels = _require(data, "levels", list, "$")
    if not levels:
        raise InvalidSpec("a tower needs at least one level", "$.levels")
    degrees: List[int] = []
    parsed: List[LevelSpec] = []
    for i, level in enumerate(levels):
        path = f"$.levels[{i}]"
        if not isinstance(level, dict):
            raise InvalidSpec("level must be an object", path)
        generator = _require(level, "generator", str, path)
        if not generator.strip():
            raise InvalidSpec("generator name is empty", f"{path}.generator")
        coefficients = _require(level, "min_poly", list, path)
        if len(coefficients) < 2:
            raise InvalidSpec("defining polynomial must have degree >= 1", f"{path}.min_poly")
        min_poly = [
            parse_element(c, degrees, f"{path}.min_poly[{j}]") for j, c in enumerate(coefficients)
        ]
        if not _is_one(min_poly[-1]):
            raise InvalidSpec(
                "defining polynomial must be monic", f"{path}.min_poly[{len(min_poly) - 1}]"
            )
        degrees.append(len(min_poly) - 1)
        parsed.append(LevelSpec(generator, min_poly))
    if "theta_image" not in data:
        raise InvalidSpec("missing key 'theta_image'")
    theta_image = parse_element(data["theta_image"], degrees, "$.theta_image")
    return FieldSpec(levels=parsed, theta_image=theta_image, version=FORMAT_VERSION)


def parse_spec(text: str) -> FieldSpec:
    return spec_from_dict(load_json(text))


def build_field(spec: FieldSpec) -> Tuple[FieldTower, Automorphism]:
    """The tower and automorphism described by ``spec``."""
    try:
        tower = FieldTower([(lv.generator, lv.min_poly) for lv in spec.levels])
    except InvalidTower as e:
        raise InvalidSpec(str(e), "$.levels") from e
    try:
        theta = Automorphism(tower, spec.theta_image)
    except InvalidAutomorphism as e:
        raise InvalidSpec(str(e), "$.theta_image") from e
    return tower, theta


def spec_document(spec: FieldSpec) -> Dict[str, Any]:
    doc = spec.to_dict()
    for level in doc["levels"]:
        level["min_poly"] = to_json(level["min_poly"])
    doc["theta_image"] = to_json(doc["theta_image"])
    return doc


def serialize_spec(spec: FieldSpec) -> str:
    return json.dumps(spec_document(spec)) + "\n"


def spec_digest(spec: FieldSpec) -> str:
    """SHA-256 of the canonical spec text, used as a cache key."""
    canonical = json.dumps(spec_document(spec), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


def read_spec(source: SpecSource) -> FieldSpec:
    """Load a spec from a file path or a ``preset:NAME`` reference."""
    source = str(source)
    if source.startswith(PRESET_PREFIX):
        name = source[len(PRESET_PREFIX) :]
        if name not in preset_registry:
            raise InvalidSpec(
                f"unknown preset {name!r}; available: {', '.join(preset_registry.names())}"
            )
        logger.debug(f"Loading preset {name}")
        return spec_from_dict(preset_registry.build(name))
    return parse_spec(Path(source).read_text())


def field_degrees(field: ExtensionField) -> List[int]:
    """Degrees of every level from the first extension up to ``field``."""
    return [f.degree for f in reversed(field.ancestors()) if isinstance(f, ExtensionField)]


def word_from_dict(data: Any, field: ExtensionField) -> Word:
    _check_version(data)
    entries = _require(data, "entries", list, "$")
    degrees = field_degrees(field)
    values = [parse_element(e, degrees, f"$.entries[{j}]") for j, e in enumerate(entries)]
    return Word(field, values)


def parse_word(text: str, field: ExtensionField) -> Word:
    return word_from_dict(load_json(text), field)


def serialize_word(word: Word) -> str:
    return json.dumps({"version": FORMAT_VERSION, "entries": to_json(word.entries)}) + "\n"


def read_word(path: SpecSource, field: ExtensionField) -> Word:
    return parse_word(Path(path).read_text(), field)


def write_word(path: SpecSource, word: Word) -> None:
    Path(path).write_text(serialize_word(word))
    logger.info(f"Wrote word of length {len(word)} to {path}")
