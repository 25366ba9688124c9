from .moves import (UnknownArc, NotSameFace, NotAKink, MoveKind, WALK_MOVES, MoveStep,
                    parse_moves, r1_insert, p1_insert, r1_remove, p1_remove, kink_loop,
                    kink_sites, r2_sites, r2_insert, iter_move_walk, random_move_walk)
from .fixtures import (FIXTURE_DIR, FixturePair, braid_closure, random_braid_word,
                       random_braid_diagram, load_fixture_pairs, r3_fixture_pairs,
                       p2_fixture_pairs, p3_fixture_pairs)
from .fuzz import FuzzResult, MoveFuzzer
