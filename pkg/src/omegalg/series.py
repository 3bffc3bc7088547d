"""Power series as coefficient queries, plus the word machinery.

A :class:`Series` is an intensional object: a coefficient function over
finite words, memoised, optionally backed by a polynomial table, an
expression or an automaton.  Products are Cauchy products; when the weight
domain carries length-indexed products (valuation structures) the splits are
combined with ``prod(|u|, |v|, ·, ·)``, which collapses to plain
multiplication for hemiring weights.

Ultimately periodic infinite words are represented by :class:`OmegaWord`
lassos in canonical form: primitive period, shortest prefix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import dfa as dfalib
from .core import Hemiring, LawFailure, LawReport, words_up_to

DEFAULT_BOUND = 8


# --- omega words ---------------------------------------------------------------

def _primitive_root(v: str) -> str:
    n = len(v)
    for p in range(1, n):
        if n % p == 0 and v[:p] * (n // p) == v:
            return v[:p]
    return v


@dataclass(frozen=True)
class OmegaWord:
    """Ultimately periodic word prefix · period^omega, canonicalised.

    Canonical form: the period is primitive and the prefix cannot be
    shortened by rotating its last letter into the period.  Equality of
    canonical forms is equality of the infinite words.
    """

    prefix: str
    period: str

    def __post_init__(self):
        if not self.period:
            raise ValueError("period must be nonempty")
        v = _primitive_root(self.period)
        u = self.prefix
        while u and u[-1] == v[-1]:
            u = u[:-1]
            v = v[-1] + v[:-1]
        object.__setattr__(self, "prefix", u)
        object.__setattr__(self, "period", v)

    def letters(self, count: int) -> str:
        """The first ``count`` letters of the infinite word."""
        u, v = self.prefix, self.period
        if count <= len(u):
            return u[:count]
        rest = count - len(u)
        reps = rest // len(v) + 1
        return u + (v * reps)[:rest]

    def letter_at(self, index: int) -> str:
        if index < len(self.prefix):
            return self.prefix[index]
        return self.period[(index - len(self.prefix)) % len(self.period)]

    def suffix(self, drop: int) -> "OmegaWord":
        """The omega word with the first ``drop`` letters removed."""
        u, v = self.prefix, self.period
        if drop <= len(u):
            return OmegaWord(u[drop:], v)
        j = (drop - len(u)) % len(v)
        return OmegaWord("", v[j:] + v[:j])

    def __str__(self):
        return f"{self.prefix}({self.period})^w"


_OMEGA_RE = re.compile(r"^([a-z]*)\(([a-z]+)\)\^w$")
_OMEGA_BARE_RE = re.compile(r"^([a-z]*?)([a-z])\^w$")


def parse_word(text: str):
    """Parse CLI word syntax: bare strings for finite words, ``u(v)^w`` lassos."""
    t = text.strip()
    if "^w" not in t:
        if not re.fullmatch(r"[a-z]*", t):
            raise ValueError(f"not a word: {text!r}")
        return t
    m = _OMEGA_RE.match(t)
    if m:
        return OmegaWord(m.group(1), m.group(2))
    m = _OMEGA_BARE_RE.match(t)
    if m:
        return OmegaWord(m.group(1), m.group(2))
    raise ValueError(f"not an omega word: {text!r}")


# --- weight protocol -------------------------------------------------------------

class HemiringWeights:
    """Weight view of a plain carrier: products ignore the length indices."""

    def __init__(self, carrier):
        self.carrier = carrier
        self.name = carrier.name
        self.add = carrier.add
        self.zero = carrier.zero
        self.eq = carrier.eq
        self.show = carrier.show
        self.unit = getattr(carrier, "one", None)
        self.sample = carrier.sample

    def prod(self, m, n, a, b):
        return self.carrier.mul(a, b)

    def nat_act(self, n, a):
        return self.carrier.nat_act(n, a)


# --- series -----------------------------------------------------------------------

class Series:
    """Coefficient query over finite words, memoised."""

    __slots__ = ("weights", "alphabet", "fn", "proper", "backing", "_memo")

    def __init__(self, weights, alphabet, fn, proper=True, backing=None):
        self.weights = weights
        self.alphabet = tuple(alphabet)
        self.fn = fn
        self.proper = proper
        self.backing = backing
        self._memo = {}

    def coeff(self, word: str):
        for ch in word:
            if ch not in self.alphabet:
                raise ValueError(f"letter {ch!r} outside alphabet {self.alphabet}")
        if word in self._memo:
            return self._memo[word]
        if self.proper and not word:
            val = self.weights.zero
        else:
            val = self.fn(word)
        self._memo[word] = val
        return val


def zero_series(weights, alphabet) -> Series:
    return Series(weights, alphabet, lambda w: weights.zero, backing={})


def polynomial(weights, alphabet, table: dict) -> Series:
    """Finite-support series; missing words have coefficient zero."""
    proper = "" not in table
    return Series(weights, alphabet,
                  lambda w: table.get(w, weights.zero), proper=proper, backing=dict(table))


def letter_series(weights, alphabet, ch) -> Series:
    if weights.unit is None:
        raise ValueError("letter series need a unit weight")
    return polynomial(weights, alphabet, {ch: weights.unit})


def series_add(f: Series, g: Series) -> Series:
    w = f.weights
    return Series(w, f.alphabet, lambda word: w.add(f.coeff(word), g.coeff(word)),
                  proper=f.proper and g.proper)


def cauchy_mul(f: Series, g: Series) -> Series:
    """(fg, w) = sum over splits uv = w of (f,u) ·(|u|,|v|) (g,v)."""
    if f.weights is not g.weights:
        same_kind = (f.weights.name == g.weights.name and
                     getattr(f.weights, "params", None) == getattr(g.weights, "params", None))
        if not same_kind:
            raise ValueError("carrier mismatch in product")
    w = f.weights

    def fn(word):
        n = len(word)
        total = w.zero
        lo = 1 if f.proper else 0
        hi = n - 1 if g.proper else n
        for i in range(lo, hi + 1):
            total = w.add(total, w.prod(i, n - i, f.coeff(word[:i]), g.coeff(word[i:])))
        return total

    return Series(w, f.alphabet, fn, proper=f.proper or g.proper)


def series_plus(f: Series) -> Series:
    """Sum over all factorizations into nonempty pieces of the piecewise product.

    Dynamic programming over prefixes; the left fold of the indexed products
    matches the induced valuation by the split law.
    """
    if not f.proper:
        raise ValueError("plus is defined on proper series only")
    w = f.weights

    def fn(word):
        n = len(word)
        if n == 0:
            return w.zero
        T = [w.zero] * (n + 1)
        for j in range(1, n + 1):
            total = f.coeff(word[:j])
            for i in range(1, j):
                total = w.add(total, w.prod(i, j - i, T[i], f.coeff(word[i:j])))
            T[j] = total
        return T[n]

    return Series(w, f.alphabet, fn, proper=True)


def scale_nat(n: int, f: Series) -> Series:
    w = f.weights
    return Series(w, f.alphabet, lambda word: w.nat_act(n, f.coeff(word)), proper=f.proper)


def bounded_eq(f: Series, g: Series, bound: int = DEFAULT_BOUND) -> LawReport:
    """Compare coefficients on every word of length <= bound.

    A failure is a definitive inequality witness; success is bounded evidence
    only.
    """
    if f.alphabet != g.alphabet:
        raise ValueError("alphabet mismatch")
    w = f.weights
    report = LawReport(f"bounded-eq(L={bound})", 0)
    for word in words_up_to(f.alphabet, bound):
        report.trials += 1
        a, b = f.coeff(word), g.coeff(word)
        if not w.eq(a, b):
            report.failures.append(LawFailure("coeff", (word or "<empty>",), w.show(a), w.show(b)))
            if len(report.failures) >= 20:
                break
    return report


# --- series carriers ----------------------------------------------------------------

class SeriesCarrier(Hemiring):
    """Hemiring of proper series over a weight domain, with bounded equality."""

    def __init__(self, weights, alphabet, bound=DEFAULT_BOUND, name=None):
        self.weights = weights
        self.alphabet = tuple(alphabet)
        self.bound = bound
        self.name = name or f"{weights.name}-series"
        self.zero = zero_series(weights, self.alphabet)

    def coeff(self, f, word):
        return f.coeff(word)

    def add(self, f, g):
        return series_add(f, g)

    def mul(self, f, g):
        return cauchy_mul(f, g)

    def plus(self, f):
        return series_plus(f)

    def eq(self, f, g):
        return bounded_eq(f, g, self.bound).ok

    def show(self, f):
        parts = []
        for word in words_up_to(self.alphabet, min(self.bound, 3)):
            v = f.coeff(word)
            if not self.weights.eq(v, self.weights.zero):
                label = word or "<e>"
                parts.append(f"{self.weights.show(v)}·{label}"
                             if self.weights.show(v) != "1" else label)
            if len(parts) > 6:
                parts.append("…")
                break
        return "(" + " + ".join(parts) + ")" if parts else "0"

    def poly(self, table):
        return polynomial(self.weights, self.alphabet, table)

    def letter(self, ch):
        return letter_series(self.weights, self.alphabet, ch)

    def sample(self, rng):
        support = rng.randrange(1, 3)
        table = {}
        for _ in range(support):
            length = rng.randrange(1, 3)
            word = "".join(rng.choice(self.alphabet) for _ in range(length))
            table[word] = self._sample_coeff(rng)
        return self.poly(table)

    def _sample_coeff(self, rng):
        return self.weights.sample(rng)


def nat_series_instance(alphabet=("a", "b"), bound=DEFAULT_BOUND) -> SeriesCarrier:
    from .instances import NatCarrier
    c = SeriesCarrier(HemiringWeights(NatCarrier()), alphabet, bound, name="nat-series")
    c._sample_coeff = lambda rng: rng.randrange(1, 4)
    return c


# --- the regular-language instance ----------------------------------------------------
#
# Elements are proper boolean series backed by minimised DFAs, which keeps
# coefficient queries at O(|w|) and makes the omega-side (lasso) analysis of
# the hemimodule pair cheap.  Equality stays the bounded coefficient check.

class _BoolWeights(HemiringWeights):
    pass


class LanguageCarrier(SeriesCarrier):
    """Epsilon-free regular languages as a Conway hemiring (no unit)."""

    def __init__(self, alphabet=("a", "b"), bound=DEFAULT_BOUND):
        from .instances import BooleanCarrier
        super().__init__(_BoolWeights(BooleanCarrier()), alphabet, bound, name="lang")
        self.zero = self._from_dfa(
            dfalib.Dfa(self.alphabet, 1, 0, frozenset(), [dict()]))

    # every element carries a minimised DFA in ``backing``
    def _from_dfa(self, d: dfalib.Dfa) -> Series:
        return Series(self.weights, self.alphabet, d.run, proper=True, backing=d)

    def _from_nfa(self, nfa: dfalib.Nfa) -> Series:
        return self._from_dfa(dfalib.minimize(dfalib.determinize(nfa)))

    def poly(self, table) -> Series:
        words = [w for w, v in table.items() if v]
        if not words:
            return self.zero
        return self._from_nfa(dfalib.nfa_from_words(self.alphabet, words))

    def language(self, *words) -> Series:
        return self.poly({w: True for w in words})

    def letter(self, ch) -> Series:
        return self.language(ch)

    def add(self, f, g):
        return self._from_nfa(dfalib.nfa_union(dfalib.dfa_to_nfa(f.backing),
                                               dfalib.dfa_to_nfa(g.backing)))

    def mul(self, f, g):
        if dfalib.dfa_is_empty(f.backing) or dfalib.dfa_is_empty(g.backing):
            return self.zero
        return self._from_nfa(dfalib.nfa_concat(dfalib.dfa_to_nfa(f.backing),
                                                dfalib.dfa_to_nfa(g.backing)))

    def plus(self, f):
        if dfalib.dfa_is_empty(f.backing):
            return self.zero
        return self._from_nfa(dfalib.nfa_plus(dfalib.dfa_to_nfa(f.backing)))

    def show(self, f):
        words = dfalib.enumerate_words(f.backing, 4, limit=7)
        if not words:
            return "{}" if dfalib.dfa_is_empty(f.backing) else "{…}"
        body = ", ".join(words[:6]) + (", …" if len(words) > 6 else "")
        return "{" + body + "}"

    def sample(self, rng):
        support = rng.randrange(1, 3)
        words = set()
        for _ in range(support):
            length = rng.randrange(1, 3)
            words.add("".join(rng.choice(self.alphabet) for _ in range(length)))
        f = self.language(*sorted(words))
        # occasionally hand back a composite so the suites see plus-closed
        # and concatenated elements too
        r = rng.random()
        if r < 0.2:
            return self.plus(f)
        if r < 0.3:
            g = self.language(rng.choice(self.alphabet))
            return self.mul(f, g)
        return f


def language_instance(alphabet=("a", "b"), bound=DEFAULT_BOUND) -> LanguageCarrier:
    return LanguageCarrier(alphabet, bound)


# --- omega series -----------------------------------------------------------------------

class OmegaSeries:
    """Coefficient query over ultimately periodic infinite words."""

    __slots__ = ("weights", "alphabet", "fn", "backing", "_memo")

    def __init__(self, weights, alphabet, fn, backing=None):
        self.weights = weights
        self.alphabet = tuple(alphabet)
        self.fn = fn
        self.backing = backing
        self._memo = {}

    def coeff(self, w: OmegaWord):
        if w in self._memo:
            return self._memo[w]
        val = self.fn(w)
        self._memo[w] = val
        return val
