"""Boolean omega-languages over ultimately periodic words.

The module side of the pair (nonempty-word languages, omega-languages) is
represented by *fingerprints*: the set of accepted lassos from a fixed
canonical family with bounded stem and period.  Fingerprints are closed
under union, under the left action of a DFA-backed language, and under the
omega power of such a language, and on the canonical family these three
operations compute the true omega-language pointwise, so the pair identities
can be checked exactly within the bound.
"""

from __future__ import annotations

from functools import lru_cache

from . import dfa as dfalib
from .core import CommutativeMonoid, HemimodulePair
from .series import OmegaWord, language_instance

DEFAULT_STEM = 4
DEFAULT_PERIOD = 4


@lru_cache(maxsize=None)
def canonical_lassos(alphabet: tuple, stem_max=DEFAULT_STEM, period_max=DEFAULT_PERIOD):
    """All distinct ultimately periodic words with canonical stem <= stem_max
    and canonical period <= period_max, grouped by period."""
    seen = set()
    stems = [""]
    frontier = [""]
    for _ in range(stem_max):
        frontier = [w + ch for w in frontier for ch in alphabet]
        stems.extend(frontier)
    periods = []
    frontier = [""]
    for _ in range(period_max):
        frontier = [w + ch for w in frontier for ch in alphabet]
        periods.extend(frontier)
    for u in stems:
        for v in periods:
            w = OmegaWord(u, v)
            if len(w.prefix) <= stem_max and len(w.period) <= period_max:
                seen.add(w)
    by_period = {}
    for w in sorted(seen, key=lambda w: (len(w.period), w.period, len(w.prefix), w.prefix)):
        by_period.setdefault(w.period, []).append(w)
    return by_period


class OmegaLangMonoid(CommutativeMonoid):
    """Omega-languages as acceptance fingerprints on the canonical lassos."""

    def __init__(self, alphabet=("a", "b"), stem_max=DEFAULT_STEM, period_max=DEFAULT_PERIOD):
        self.alphabet = tuple(alphabet)
        self.stem_max = stem_max
        self.period_max = period_max
        self.by_period = canonical_lassos(self.alphabet, stem_max, period_max)
        self.lassos = tuple(w for group in self.by_period.values() for w in group)
        self.name = "omega-lang"
        self.zero = frozenset()

    def add(self, a, b):
        return a | b

    def eq(self, a, b):
        return a == b

    def show(self, a):
        if not a:
            return "{}"
        items = sorted(str(w) for w in a)
        body = ", ".join(items[:4]) + (", …" if len(items) > 4 else "")
        return "{" + body + "}"

    def sample(self, rng):
        count = rng.randrange(0, 4)
        return frozenset(rng.choice(self.lassos) for _ in range(count))

    def coeff(self, a, w: OmegaWord) -> bool:
        if len(w.prefix) > self.stem_max or len(w.period) > self.period_max:
            raise ValueError(f"{w} lies outside the fingerprint bound")
        return w in a


def act_language(lang, fp, monoid: OmegaLangMonoid) -> frozenset:
    """Left action: { p·w : p in lang, w in fp }, evaluated on the canonical lassos.

    For each lasso, split points are scanned with the backing DFA of the
    language; the scan stops as soon as the (period position, DFA state)
    pair repeats, which makes the unbounded split search finite and exact.
    """
    d = lang.backing
    out = set()
    for w in monoid.lassos:
        state = d.start
        seen = set()
        m = len(w.period)
        pos = 0
        while True:
            state = d.step(state, w.letter_at(pos))
            pos += 1
            if state is None:
                break
            if state in d.accept and w.suffix(pos) in fp:
                out.add(w)
                break
            if pos >= len(w.prefix):
                key = ((pos - len(w.prefix)) % m, state)
                if key in seen:
                    break
                seen.add(key)
    return frozenset(out)


def _omega_nfa(lang) -> tuple:
    """Buchi automaton for the omega power of a DFA-backed language.

    Feedback edges from accepting states are routed through fresh copies of
    their targets; visiting a copy infinitely often means infinitely many
    factor boundaries, which is exactly membership in the omega power.
    Returns (steps, n, start_mask, repeated_mask).
    """
    base = dfalib.dfa_to_nfa(lang.backing)
    start_out = _start_out_map(base)
    targets = sorted({t for m in start_out.values() for t in dfalib.bits(m)})
    copy_index = {t: base.n + i for i, t in enumerate(targets)}
    steps = [dict(d) for d in base.steps] + [dict(base.steps[t]) for t in targets]
    feedback = {ch: _mask_to_copies(m, copy_index) for ch, m in start_out.items()}
    boundary_states = list(dfalib.bits(base.accept))
    boundary_states += [copy_index[t] for t in targets if (base.accept >> t) & 1]
    for s in boundary_states:
        for ch, m in feedback.items():
            steps[s][ch] = steps[s].get(ch, 0) | m
    repeated = 0
    for c in copy_index.values():
        repeated |= 1 << c
    return steps, base.n + len(targets), base.start, repeated


def _start_out_map(nfa):
    out = {}
    for s in dfalib.bits(nfa.start):
        for ch, m in nfa.steps[s].items():
            out[ch] = out.get(ch, 0) | m
    return out


def _mask_to_copies(mask, copy_index):
    out = 0
    for t in dfalib.bits(mask):
        out |= 1 << copy_index[t]
    return out


def omega_language(lang, monoid: OmegaLangMonoid) -> frozenset:
    """Fingerprint of the omega power of a DFA-backed language."""
    if dfalib.dfa_is_empty(lang.backing):
        return monoid.zero
    steps, n, start, repeated = _omega_nfa(lang)
    out = set()
    for period, group in monoid.by_period.items():
        win0 = dfalib.buchi_win_at_entry(steps, n, repeated, period)
        if not win0:
            continue
        for w in group:
            mask = start
            dead = False
            for ch in w.prefix:
                mask = dfalib.step_mask(steps, mask, ch)
                if not mask:
                    dead = True
                    break
            if not dead and mask & win0:
                out.add(w)
    return frozenset(out)


def language_pair(alphabet=("a", "b"), bound=8, stem_max=DEFAULT_STEM,
                  period_max=DEFAULT_PERIOD) -> HemimodulePair:
    """The pair (nonempty-word languages, omega-languages) over ``alphabet``."""
    H = language_instance(alphabet, bound)
    V = OmegaLangMonoid(alphabet, stem_max, period_max)
    return HemimodulePair(
        hemiring=H,
        module=V,
        act=lambda h, v: act_language(h, v, V),
        omega=lambda h: omega_language(h, V),
        name=f"lang-pair({''.join(alphabet)})",
    )
