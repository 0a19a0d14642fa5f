"""Validates protocol messages read from stdin against the JSON schema."""
import json
import sys

import jsonschema

schema = json.load(open(sys.argv[1]))
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

count = 0
bad = 0
for number, line in enumerate(sys.stdin, 1):
    count += 1
    for error in validator.iter_errors(json.loads(line)):
        bad += 1
        print(f"line {number}: {error.message}")

# Replies the harness must reject are also outside the schema.
for reply in (
    {"type": "act", "period": 1, "payload": {"orders": {"order": -1}}},
    {"type": "act", "period": 1, "payload": {"orders": {"order": 1.5}}},
    {"type": "act", "period": 1, "payload": {}},
    {"type": "act", "period": 1, "payload": {"orders": {}}, "extra": 1},
):
    if validator.is_valid(reply):
        bad += 1
        print(f"accepted invalid reply: {json.dumps(reply)}")

print(f"{count} messages checked, {bad} problems")
sys.exit(1 if bad or count == 0 else 0)
