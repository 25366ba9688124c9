from .knotinfo import (UnknownKnot, NAME_COLUMN, PD_COLUMN, normalize_name,
                       read_knotinfo, lookup, ingest)
