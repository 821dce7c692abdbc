"""Tietze transformations for finite group presentations, with instrumented
substring search (naive, hashed signatures, change flags, and both)."""
from .words import (canonical_form, cyclic_reduce, free_reduce, invert, is_proper_power,
                    order_key, rotate)
from .presentation import (AbelianInvariants, Presentation, abelian_invariants, normalize,
                           occurrence_profile, total_length)
from .search import MatchSpec, apply_replacement, brute_force_oracle, find_useful_match
from .signatures import (SigConfig, Signature, compatible, cyclic_signature, linear_signature,
                         pair_hash, pattern_signatures, prefilter)
from .flags import FlagTable, PassFlags, init_flags
from .driver import (SearchStats, SimplifyOptions, SimplifyResult, Simplifier, Strategy,
                     TransformLog, eliminate, long_elimination, replacement_pass, replay,
                     short_eliminations, simplify)
from .textio import ParseError, parse, serialize
from .corpus import uglify

__version__ = "0.1.0"
