"""
Unital JSON Module

Reads and writes N-unital functions as JSON Lines: one object per line in the
schema {"n": N, "constant": {"n": N, "coeffs": [[num, den], ...]},
"exponents": {"origin": e, "root:r": e, ...}}. Parsing validates every record
and reports failures with their line number.
"""

import json
import os
import re
from typing import Any, Dict, Iterable, List, Optional, Tuple

from cyclotomic import CyclotomicError, euler_phi
from unital import UnitalError, UnitalFn, from_json, to_json

_DECIMAL = re.compile(r"-?[0-9]+")


class UnitalJSONError(Exception):
    """Custom exception for unital JSON parsing errors."""
    pass


class UnitalRecordValidator:
    """Validates the shape of one JSON record before it is converted."""

    REQUIRED_FIELDS = ("n", "constant", "exponents")

    @staticmethod
    def validate_record(record: Any) -> None:
        """
        Check field presence and types of one record.

        Args:
            record: Decoded JSON value of one line

        Raises:
            UnitalJSONError: If the record does not follow the schema
        """
        if not isinstance(record, dict):
            raise UnitalJSONError(f"Expected an object, got {type(record).__name__}")
        for name in UnitalRecordValidator.REQUIRED_FIELDS:
            if name not in record:
                raise UnitalJSONError(f"Missing field {name!r}")
        n = record["n"]
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise UnitalJSONError(f"Field 'n' must be a positive integer, got {n!r}")
        constant = record["constant"]
        if not isinstance(constant, dict) or "coeffs" not in constant:
            raise UnitalJSONError("Field 'constant' must be an object with 'coeffs'")
        coeffs = constant["coeffs"]
        if not isinstance(coeffs, list) or len(coeffs) != euler_phi(n):
            raise UnitalJSONError(f"Constant needs {euler_phi(n)} coefficients for n={n}")
        for pair in coeffs:
            if not isinstance(pair, list) or len(pair) != 2:
                raise UnitalJSONError(f"Coefficient {pair!r} is not a [num, den] pair")
            num, den = (UnitalRecordValidator._integer(part) for part in pair)
            if num is None or den is None:
                raise UnitalJSONError(f"Coefficient {pair!r} must hold decimal integer strings")
            if den == 0:
                raise UnitalJSONError(f"Coefficient {pair!r} has a zero denominator")
        exponents = record["exponents"]
        if not isinstance(exponents, dict):
            raise UnitalJSONError("Field 'exponents' must be an object")
        for key, value in exponents.items():
            if isinstance(value, bool) or not isinstance(value, int):
                raise UnitalJSONError(f"Exponent of {key!r} must be an integer")

    @staticmethod
    def _integer(part: Any) -> Optional[int]:
        """The integer a coefficient part stands for, or None if it is not a decimal integer."""
        if isinstance(part, int) and not isinstance(part, bool):
            return part
        if isinstance(part, str) and _DECIMAL.fullmatch(part):
            return int(part)
        return None

    @staticmethod
    def summarize(functions: List[UnitalFn]) -> Dict[str, Any]:
        """Small structural summary of a parsed file."""
        return {
            "count": len(functions),
            "orders": sorted({f.order for f in functions}),
            "max_degree": max(
                (max(f.numerator_degree, f.denominator_degree) for f in functions), default=0
            ),
        }


class UnitalJSONParser:
    """Handles JSON Lines parsing of unital functions with line-level error reporting."""

    def __init__(self):
        self.validator = UnitalRecordValidator()

    def parse_file(self, file_path: str) -> Tuple[List[UnitalFn], Dict[str, Any]]:
        """
        Parse functions from a JSON Lines file.

        Args:
            file_path: Path to the file

        Returns:
            Tuple of (functions, summary)

        Raises:
            UnitalJSONError: If reading or parsing fails
        """
        if not os.path.exists(file_path):
            raise UnitalJSONError(f"File not found: {file_path}")

        if not os.path.isfile(file_path):
            raise UnitalJSONError(f"Path is not a file: {file_path}")

        try:
            with open(file_path, 'r', encoding='utf-8') as file:
                content = file.read()
        except PermissionError:
            raise UnitalJSONError(f"Permission denied reading file: {file_path}")
        except UnicodeDecodeError as e:
            raise UnitalJSONError(f"File encoding error: {e}")
        except OSError as e:
            raise UnitalJSONError(f"Error reading file {file_path}: {e}")

        if not content.strip():
            raise UnitalJSONError("File is empty")
        return self.parse_string(content)

    def parse_string(self, text: str) -> Tuple[List[UnitalFn], Dict[str, Any]]:
        """
        Parse functions from JSON Lines text; blank lines are skipped.

        Raises:
            UnitalJSONError: On empty input, invalid JSON or an invalid record
        """
        if not text or not text.strip():
            raise UnitalJSONError("JSON Lines input is empty")

        functions: List[UnitalFn] = []
        for number, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as e:
                raise UnitalJSONError(f"Line {number}: invalid JSON syntax: {e}")
            try:
                self.validator.validate_record(record)
                functions.append(from_json(record))
            except UnitalJSONError as e:
                raise UnitalJSONError(f"Line {number}: {e}")
            except (CyclotomicError, UnitalError, ValueError, KeyError, ZeroDivisionError) as e:
                raise UnitalJSONError(f"Line {number}: invalid function: {e}")
        return functions, self.validator.summarize(functions)


def dump_lines(functions: Iterable[UnitalFn]) -> str:
    """Serialize functions as JSON Lines with fixed key order, one per line."""
    return "".join(json.dumps(to_json(f)) + "\n" for f in functions)
