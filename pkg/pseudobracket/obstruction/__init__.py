from .obstruction import (HasPseudoCrossings, MultiComponent, Verdict, ObstructionReport,
                          CrossingScanner, check_classical_knot, obstruct, scan,
                          render_table)
