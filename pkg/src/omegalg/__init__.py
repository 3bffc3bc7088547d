"""Iteration algebra with star, plus and omega.

Carriers and law suites (:mod:`omegalg.core`, :mod:`omegalg.instances`),
formal-sum extensions (:mod:`omegalg.extension`), matrix calculus
(:mod:`omegalg.matrices`), series and omega words (:mod:`omegalg.series`),
averaging/discounting weight structures (:mod:`omegalg.valuation`), weighted
Buchi automata (:mod:`omegalg.automata`), and the expression layer
(:mod:`omegalg.ratexpr`).
"""

from .core import (HemimodulePair, LawReport, conway_hemiring_laws,
                   conway_semiring_laws, hemimodule_pair_laws,
                   iterative_fixed_point_check, plus_from_star, self_pair,
                   star_from_plus)
from .instances import make_instance
from .series import OmegaWord, Series, bounded_eq, language_instance, parse_word
from .valuation import WeightedSeq, make_valuation_instance

__all__ = [
    "HemimodulePair", "LawReport", "OmegaWord", "Series", "WeightedSeq",
    "bounded_eq", "conway_hemiring_laws", "conway_semiring_laws",
    "hemimodule_pair_laws", "iterative_fixed_point_check", "language_instance",
    "make_instance", "make_valuation_instance", "parse_word", "plus_from_star",
    "self_pair", "star_from_plus",
]
