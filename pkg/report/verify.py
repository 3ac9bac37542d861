"""Decision record verification."""

import json
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List

import jsonschema

from engine.core.errors import ReportError
from engine.util.json import load_json
from report.seal import verify_seal

SCHEMA_PATH = Path(__file__).parent / "schema" / "decision.schema.json"


@lru_cache(maxsize=1)
def load_schema() -> Dict[str, Any]:
    """Load the decision record JSON schema."""
    return load_json(SCHEMA_PATH)


def verify_record_structure(record: Any) -> List[str]:
    """
    Verify record structure against schema.

    Args:
        record: Parsed record

    Returns:
        List of validation errors (empty if valid)
    """
    validator = jsonschema.Draft7Validator(load_schema())
    return [
        f"{error.json_path}: {error.message}"
        for error in sorted(validator.iter_errors(record), key=lambda e: e.json_path)
    ]


def verify_record(record_path: Path) -> Dict[str, Any]:
    """
    Verify a saved decision record.

    Args:
        record_path: Path to record JSON

    Returns:
        Verification results dictionary

    Raises:
        ReportError: If the file cannot be read
    """
    results: Dict[str, Any] = {
        "valid": False,
        "errors": [],
        "details": {},
    }

    try:
        record = load_json(record_path)
    except json.JSONDecodeError as e:
        results["errors"].append(f"Invalid JSON: {e}")
        return results
    except OSError as e:
        raise ReportError(f"Cannot read record: {e}", str(record_path)) from e

    structure_errors = verify_record_structure(record)
    if structure_errors:
        results["errors"].extend(structure_errors)
        return results
    results["details"]["structure"] = "valid"

    if not verify_seal(record):
        results["errors"].append("Integrity proof verification failed")
        return results
    results["details"]["seal"] = "valid"

    results["valid"] = True
    return results
