"""Base exception for the toolkit.

Concrete errors live next to the code that raises them and derive from
``ACCError`` so the CLI can catch one type.
"""


class ACCError(Exception):
    """Base error for angular control chart operations."""
    pass
