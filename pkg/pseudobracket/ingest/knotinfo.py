"""
KnotInfo CSV export lookup
"""
import pandas as pd
from pseudobracket.diagram import (knotinfo_pd_to_text, parse_pd_text, render_pd_text,
                                   ParseError, ValidationError)

NAME_COLUMN = "Name"
PD_COLUMN = "PD Notation"


class UnknownKnot(ValueError):
    pass


def normalize_name(name):
    """
    'K11n1', '11n1' and '11N1' are the same knot, so are '3_1' and '3_1 '
    """
    name = str(name).strip().lower()
    if name.startswith("k") and name[1:2].isdigit():
        name = name[1:]
    return name


def read_knotinfo(path):
    table = pd.read_csv(path, dtype=str, keep_default_na=False)
    for column in (NAME_COLUMN, PD_COLUMN):
        if column not in table.columns:
            raise ValueError(f"KnotInfo file {path} has no {column!r} column")
    return table


def lookup(table, name):
    """
    PD notation of a knot, matched on the exact name first
    """
    rows = table[table[NAME_COLUMN] == name]
    if rows.empty:
        wanted = normalize_name(name)
        rows = table[table[NAME_COLUMN].map(normalize_name) == wanted]
    if rows.empty:
        raise UnknownKnot(f"Knot {name!r} is not in the KnotInfo table")
    return rows.iloc[0][PD_COLUMN]


def ingest(path, name):
    """
    Text PD of the named knot, parsed back once to validate it
    """
    text = knotinfo_pd_to_text(lookup(read_knotinfo(path), name))
    if not text:
        return ""
    try:
        return render_pd_text(parse_pd_text(text))
    except ValidationError as e:
        raise ParseError(f"PD notation of {name!r} is not a valid knot diagram: {e}")
