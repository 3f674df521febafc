"""Validation utilities for symbols, directions and file names."""

import re

from .exceptions import BadTokenError, ParseError

EMPTY_CELL = "."

DEGREES = (0, 45, 90, 135, 180, 225, 270, 315)


def validate_symbol(token: str) -> str:
    """
    Validate a symbol token.

    Args:
        token: Candidate symbol

    Returns:
        The token unchanged

    Raises:
        BadTokenError: If the token is empty, holds whitespace, or uses the empty-cell mark
    """
    if not token:
        raise BadTokenError("Symbol cannot be empty")

    if any(ch.isspace() for ch in token):
        raise BadTokenError(f"Symbol contains whitespace: {token!r}")

    if EMPTY_CELL in token:
        raise BadTokenError(f"Symbol may not contain {EMPTY_CELL!r}: {token!r}")

    return token


def validate_degree(text: str, line: int = 0, column: int = 0) -> int:
    """
    Validate a direction given in degrees.

    Args:
        text: Degree literal, one of 0, 45, ..., 315
        line: Source line for diagnostics
        column: Source column for diagnostics

    Returns:
        The degree as an integer

    Raises:
        ParseError: If the literal is not one of the eight directions
    """
    if not re.fullmatch(r'\d+', text or ''):
        raise ParseError(f"Direction must be a degree literal, got {text!r}", line, column)

    degree = int(text)
    if degree not in DEGREES:
        raise ParseError(f"Direction must be one of {list(DEGREES)}, got {degree}", line, column)

    return degree


def sanitize_filename(filename: str, max_length: int = 200) -> str:
    """
    Sanitize a filename by removing/replacing invalid characters.

    Args:
        filename: The filename to sanitize
        max_length: Maximum length for the filename

    Returns:
        Sanitized filename
    """
    # Remove or replace invalid characters for Windows/Unix
    invalid_chars = r'[<>:"/\\|?*\x00-\x1f]'
    sanitized = re.sub(invalid_chars, '_', filename)

    # Remove leading/trailing spaces and dots
    sanitized = sanitized.strip('. ')

    if len(sanitized) > max_length:
        sanitized = sanitized[:max_length]

    if not sanitized:
        sanitized = 'untitled'

    return sanitized
