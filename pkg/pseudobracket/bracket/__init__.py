from .bracket import (TooLarge, SmoothingState, StateWeight, DEFAULT_STATE_LIMIT,
                      state_limit, crossing_weights, smooth_and_count, state_weight,
                      bracket_naive, bracket_contract, bracket, normalized_bracket,
                      smoothed_bracket, contraction_order)
