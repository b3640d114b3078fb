import functools
import json
import logging
import os

import jsonschema

from backend.core.SerializationError import SerializationError

SCHEMA_VERSION = 1
SCHEMA_DIRECTORY = os.path.normpath(os.path.join(os.path.dirname(__file__), "../../schemas/"))

logger = logging.getLogger("colloq")


@functools.lru_cache(maxsize=None)
def load_schema(schema_name):
    """Load `schemas/<schema_name>.json`, or return None when it cannot be read."""
    schema_path = os.path.join(SCHEMA_DIRECTORY, schema_name + ".json")
    try:
        with open(schema_path, encoding="utf-8") as schema_file:
            return json.loads(schema_file.read())
    except (IOError, ValueError):
        logger.warning("Unable to load validation schema `%s`, skipping validation.", schema_path)
        return None


def validate(document, schema_name):
    """Validate a JSON document against a shipped schema, raising SerializationError on mismatch."""
    schema = load_schema(schema_name)
    if schema is None:
        return document
    try:
        jsonschema.validate(document, schema)
    except jsonschema.exceptions.ValidationError as e:
        logger.error("Document does not conform to the `%s` schema: %s", schema_name, e.message)
        raise SerializationError("Document does not conform to the `%s` schema." % schema_name) from e
    return document


def versioned(document):
    """Stamp a top-level report with the schema version."""
    stamped = {"version": SCHEMA_VERSION}
    stamped.update(document)
    return stamped


def dumps(document, schema_name):
    validate(document, schema_name)
    return json.dumps(document, indent=2, sort_keys=True)


def read_json(path, schema_name):
    with open(path, encoding="utf-8") as document_file:
        try:
            document = json.loads(document_file.read())
        except ValueError as e:
            raise SerializationError("Unable to parse JSON document at `%s`." % path) from e
    return validate(document, schema_name)


def write_json(document, path, schema_name):
    text = dumps(document, schema_name)
    with open(path, "w", encoding="utf-8") as document_file:
        document_file.write(text + "\n")
