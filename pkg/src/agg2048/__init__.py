"""Score bounds for abstract 2048-style merge games and greedy
change-making, connected by their min-max equality."""

from .change import (Representation, OneShotReport, OneShotResult,
                     greedy_count, greedy_representation, ggg_scan_oracle,
                     ggg_stream, min_coins, one_shot_test)
from .errors import (IllegalStepError, ResourceLimitError, SequenceError,
                     UnknownSequenceError, UnreachableError)
from .game import (BoundState, Position, StepRecord, bounds_stream,
                   enumerate_reachable, is_reachable, replay,
                   strategy_to_reach)
from .sentinel import UNBOUNDED, is_unbounded
from .sequences import (BUILTIN_NAMES, Factorization, TileValueSequence,
                        builtin_sequence, factorization_of, from_file,
                        from_integers, is_practical, practical_stream)

__version__ = "0.1.0"

__all__ = [
    "BoundState", "BUILTIN_NAMES", "Factorization", "IllegalStepError",
    "OneShotReport", "OneShotResult", "Position", "Representation",
    "ResourceLimitError", "SequenceError", "StepRecord",
    "TileValueSequence", "UNBOUNDED", "UnknownSequenceError",
    "UnreachableError", "bounds_stream", "builtin_sequence",
    "enumerate_reachable", "factorization_of", "from_file",
    "from_integers", "ggg_scan_oracle", "ggg_stream", "greedy_count",
    "greedy_representation", "is_practical", "is_reachable",
    "is_unbounded", "min_coins", "one_shot_test", "practical_stream",
    "replay", "strategy_to_reach",
]
