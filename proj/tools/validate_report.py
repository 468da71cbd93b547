"""Validate a config and the report produced from it against the schemas."""

import json
import pathlib
import sys

import jsonschema
from referencing import Registry, Resource


def main() -> int:
    schemas, config, report = (pathlib.Path(p) for p in sys.argv[1:4])
    loaded = {name: json.loads((schemas / name).read_text()) for name in ("config.schema.json", "report.schema.json")}
    registry = Registry().with_resources(
        (name, Resource.from_contents(schema)) for name, schema in loaded.items()
    )
    jsonschema.Draft202012Validator(loaded["config.schema.json"], registry=registry).validate(
        json.loads(config.read_text())
    )
    data = json.loads(report.read_text())
    jsonschema.Draft202012Validator(loaded["report.schema.json"], registry=registry).validate(data)
    if not data["summary"]["ok"]:
        print("report summary is not ok", file=sys.stderr)
        return 1
    print(f"valid: {len(data['records'])} records, {len(data['groups'])} groups")
    return 0


if __name__ == "__main__":
    sys.exit(main())
