"""Line-oriented persistence for NTables.

One JSON object per line::

    {"surface":"F2","coords":[2,0],"i":1,"value":"10","provenance":"computed"}

Values are decimal strings so no count ever loses precision. Lines are
sorted by (surface, coords, i), which makes save -> load -> save
byte-identical. The same format carries external tangential-degree tables.
"""
import json
import logging
from typing import BinaryIO, Iterable, TextIO, Union

import jsonschema

from .exceptions import MalformedRecordError, SeveriError, TableConflictError
from .lattice import DivisorClass
from .recursion import NTable, Provenance

logger = logging.getLogger(__name__)

RECORD_SCHEMA = {
    "type": "object",
    "properties": {
        "surface": {"type": "string", "pattern": "^(P2|Q|F[1-9][0-9]*)$"},
        "coords": {"type": "array", "items": {"type": "integer"}, "minItems": 1, "maxItems": 2},
        "i": {"type": "integer", "minimum": 1},
        "value": {"type": "string", "pattern": "^[0-9]+$"},
        "provenance": {"enum": [p.value for p in Provenance]},
    },
    "required": ["surface", "coords", "i", "value", "provenance"],
    "additionalProperties": False,
}

_validator = jsonschema.Draft7Validator(RECORD_SCHEMA)


def record_line(d: DivisorClass, i: int, value: int, provenance: Provenance) -> str:
    record = {
        "surface": d.surface.tag,
        "coords": list(d.coords),
        "i": i,
        "value": str(value),
        "provenance": Provenance(provenance).value,
    }
    return json.dumps(record, separators=(",", ":"))


def dumps_table(table: NTable) -> str:
    return "".join(record_line(d, i, e.value, e.provenance) + "\n" for (d, i), e in table.items())


def save_table(table: NTable, destination: Union[BinaryIO, TextIO]) -> None:
    text = dumps_table(table)
    try:
        destination.write(text.encode("utf-8"))
    except TypeError:
        destination.write(text)
    logger.info("Saved %d entries", len(table))


def parse_lines(lines: Iterable[str]) -> NTable:
    table = NTable()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as e:
            raise MalformedRecordError(lineno, f"invalid JSON ({e.msg})")
        errors = sorted(_validator.iter_errors(record), key=lambda err: list(err.path))
        if errors:
            raise MalformedRecordError(lineno, errors[0].message)
        try:
            d = DivisorClass.from_dict(record)
        except SeveriError as e:
            raise MalformedRecordError(lineno, str(e))
        try:
            table.put(d, int(record["value"]), record["i"], Provenance(record["provenance"]))
        except TableConflictError as e:
            raise TableConflictError(
                f"N_{record['i']}({d}) on {d.surface.tag} (line {lineno})",
                table.get(d, record["i"]), record["value"],
            ) from e
    return table


def load_table(source: Union[BinaryIO, TextIO]) -> NTable:
    data = source.read()
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    table = parse_lines(data.splitlines())
    logger.info("Loaded %d entries", len(table))
    return table
