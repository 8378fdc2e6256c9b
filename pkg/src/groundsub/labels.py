"""Canonical spellings for type labels and wildcard argument labels.

Every graph in this package identifies a vertex with its label string, so
the exact spelling of labels is part of the data model.  `? extends T` and
`? super T` are accepted on input but always printed in the short forms
below.
"""

from __future__ import annotations

TOP_CLASS = "O"
BOTTOM_CLASS = "N"
WILDCARD = "?"


def upper_bounded_label(bound: str) -> str:
    """Argument admitting every subtype of `bound`."""
    return f"? <: {bound}"


def lower_bounded_label(bound: str) -> str:
    """Argument admitting every supertype of `bound`."""
    return f"? :> {bound}"


def instantiation_label(class_name: str, argument: str) -> str:
    """Label of a generic class applied to one argument label."""
    return f"{class_name}<{argument}>"
