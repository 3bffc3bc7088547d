"""Formal sums x ⊕ a: extending a hemiring by a semiring acting on it.

An :class:`ExtensionAlgebra` is the direct-sum semiring on pairs
(scalar, ideal) with product (x+a)(y+b) = xy + (xb + ay + ab).  The pairs
with zero scalar form an ideal carrying a star ``(0+a)* = 1 + plus(a)``;
when the scalar side has its own total star, the whole algebra gets one via
``(x+a)* = (x*a)* x*``.  Compatibility conditions between the action and the
plus/omega operations are universally quantified, so they are validated by
seeded sampling at construction time and a violation witness rejects the
construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import DEFAULT_SEED, LawFailure, LawReport, Semiring, has_star


class ExtensionError(ValueError):
    """A sampled compatibility condition failed; carries the witness."""


@dataclass(frozen=True, eq=False)
class FormalSum:
    scalar: object
    ideal: object


@dataclass(frozen=True)
class BiAction:
    """Left and right action of a semiring on a hemiring."""

    left: object   # (x, a) -> H
    right: object  # (a, x) -> H


def biaction_nat(h) -> BiAction:
    """The natural action of the naturals: n·a = a·n = n-fold sum of a."""
    return BiAction(left=lambda n, a: h.nat_act(n, a),
                    right=lambda a, n: h.nat_act(n, a))


def biaction_bool(h) -> BiAction:
    """The boolean action on an idempotent hemiring: 1·a = a, 0·a = 0."""
    return BiAction(left=lambda x, a: a if x else h.zero,
                    right=lambda a, x: a if x else h.zero)


class ExtensionAlgebra(Semiring):
    """Direct-sum semiring of formal sums over (scalar semiring, hemiring)."""

    def __init__(self, s0, h, biaction: BiAction, name=None,
                 validate_samples=200, seed=DEFAULT_SEED):
        self.s0 = s0
        self.h = h
        self.bi = biaction
        self.name = name or f"{s0.name}(+){h.name}"
        self.zero = FormalSum(s0.zero, h.zero)
        self.one = FormalSum(s0.one, h.zero)
        if validate_samples:
            self._validate(validate_samples, seed)

    # -- semiring structure -------------------------------------------------
    def add(self, s, t):
        return FormalSum(self.s0.add(s.scalar, t.scalar), self.h.add(s.ideal, t.ideal))

    def mul(self, s, t):
        x, a = s.scalar, s.ideal
        y, b = t.scalar, t.ideal
        ideal = self.h.add(self.h.add(self.bi.left(x, b), self.bi.right(a, y)),
                           self.h.mul(a, b))
        return FormalSum(self.s0.mul(x, y), ideal)

    def eq(self, s, t):
        return self.s0.eq(s.scalar, t.scalar) and self.h.eq(s.ideal, t.ideal)

    def show(self, s):
        return f"{self.s0.show(s.scalar)} ⊕ {self.h.show(s.ideal)}"

    def sample(self, rng):
        return FormalSum(self.s0.sample(rng), self.h.sample(rng))

    def sample_ideal(self, rng):
        return FormalSum(self.s0.zero, self.h.sample(rng))

    def scalar(self, x):
        return FormalSum(x, self.h.zero)

    def embed(self, a):
        return FormalSum(self.s0.zero, a)

    def is_ideal(self, s) -> bool:
        return self.s0.eq(s.scalar, self.s0.zero)

    # -- iteration structure ------------------------------------------------
    def partial_star(self, s) -> FormalSum:
        """Star on the ideal: (0 + a)* = 1 + plus(a)."""
        if not self.is_ideal(s):
            raise ExtensionError(
                f"partial star undefined outside the ideal: {self.show(s)}")
        return FormalSum(self.s0.one, self.h.plus(s.ideal))

    def plus(self, s) -> FormalSum:
        if self.is_ideal(s):
            return FormalSum(self.s0.zero, self.h.plus(s.ideal))
        if has_star(self.s0):
            return self.mul(s, self.star(s))
        raise ExtensionError(
            f"plus needs an ideal argument or a starred scalar side: {self.show(s)}")

    def star(self, s) -> FormalSum:
        """Total star (x + a)* = (x* a)* x*, available when s0 has a star."""
        if not has_star(self.s0):
            raise ExtensionError(f"{self.s0.name} has no star operation")
        xs = self.s0.star(s.scalar)
        t = self.bi.left(xs, s.ideal)            # x* a, an ideal element
        return FormalSum(xs, self.bi.right(self.h.plus(t), xs))

    # -- construction-time checks --------------------------------------------
    def _validate(self, samples, seed):
        rng = random.Random(seed)
        s0, h, bi = self.s0, self.h, self.bi
        checks = [
            ("left_add_scalar", lambda x, y, a, b:
                (bi.left(s0.add(x, y), a), h.add(bi.left(x, a), bi.left(y, a)))),
            ("left_mul_scalar", lambda x, y, a, b:
                (bi.left(s0.mul(x, y), a), bi.left(x, bi.left(y, a)))),
            ("left_zero", lambda x, y, a, b: (bi.left(s0.zero, a), h.zero)),
            ("left_one", lambda x, y, a, b: (bi.left(s0.one, a), a)),
            ("left_add_ideal", lambda x, y, a, b:
                (bi.left(x, h.add(a, b)), h.add(bi.left(x, a), bi.left(x, b)))),
            ("left_mul_ideal", lambda x, y, a, b:
                (bi.left(x, h.mul(a, b)), h.mul(bi.left(x, a), b))),
            ("left_annihilate", lambda x, y, a, b: (bi.left(x, h.zero), h.zero)),
            ("right_add_scalar", lambda x, y, a, b:
                (bi.right(a, s0.add(x, y)), h.add(bi.right(a, x), bi.right(a, y)))),
            ("right_mul_scalar", lambda x, y, a, b:
                (bi.right(a, s0.mul(x, y)), bi.right(bi.right(a, x), y))),
            ("right_zero", lambda x, y, a, b: (bi.right(a, s0.zero), h.zero)),
            ("right_one", lambda x, y, a, b: (bi.right(a, s0.one), a)),
            ("right_add_ideal", lambda x, y, a, b:
                (bi.right(h.add(a, b), x), h.add(bi.right(a, x), bi.right(b, x)))),
            ("right_mul_ideal", lambda x, y, a, b:
                (bi.right(h.mul(a, b), x), h.mul(a, bi.right(b, x)))),
            ("middle_associative", lambda x, y, a, b:
                (bi.right(bi.left(x, a), y), bi.left(x, bi.right(a, y)))),
            ("plus_compat_left", lambda x, y, a, b:
                (bi.right(h.plus(bi.left(x, a)), x), bi.left(x, h.plus(bi.right(a, x))))),
            ("plus_compat_right", lambda x, y, a, b:
                (h.mul(h.plus(bi.right(a, x)), a), h.mul(a, h.plus(bi.left(x, a))))),
        ]
        for _ in range(samples):
            x, y = s0.sample(rng), s0.sample(rng)
            a, b = h.sample(rng), h.sample(rng)
            for name, fn in checks:
                lhs, rhs = fn(x, y, a, b)
                if not h.eq(lhs, rhs):
                    raise ExtensionError(
                        f"bi-action law {name} fails at x={s0.show(x)} a={h.show(a)}: "
                        f"{h.show(lhs)} != {h.show(rhs)}")


def extension(s0, h, biaction=None, **kw) -> ExtensionAlgebra:
    if biaction is None:
        biaction = biaction_nat(h) if s0.name == "nat" else biaction_bool(h)
    return ExtensionAlgebra(s0, h, biaction, **kw)


# --- the partial-Conway law suite ------------------------------------------------

def partial_conway_laws(ext: ExtensionAlgebra, trials=200, seed=DEFAULT_SEED) -> LawReport:
    """Star identities restricted to the ideal, product forms for mixed arguments."""
    rng = random.Random(seed)
    report = LawReport(f"partial-conway:{ext.name}", 0)

    def check(name, args, lhs, rhs):
        report.trials += 1
        if not ext.eq(lhs, rhs):
            report.failures.append(LawFailure(
                name, tuple(ext.show(v) for v in args), ext.show(lhs), ext.show(rhs)))

    for _ in range(trials):
        a, b = ext.sample_ideal(rng), ext.sample_ideal(rng)
        s = ext.sample(rng)
        # sum star on ideal arguments
        check("sum_star_ideal", (a, b),
              ext.partial_star(ext.add(a, b)),
              ext.mul(ext.partial_star(ext.mul(ext.partial_star(a), b)), ext.partial_star(a)))
        # product star with the mixed argument in either slot
        check("product_star_mixed", (s, a),
              ext.partial_star(ext.mul(s, a)),
              ext.add(ext.one, ext.mul(s, ext.mul(ext.partial_star(ext.mul(a, s)), a))))
        check("product_star_mixed_flip", (a, s),
              ext.partial_star(ext.mul(a, s)),
              ext.add(ext.one, ext.mul(a, ext.mul(ext.partial_star(ext.mul(s, a)), s))))
        # simplified product plus for mixed arguments
        check("product_plus_mixed", (s, a),
              ext.mul(ext.plus(ext.mul(s, a)), s), ext.mul(s, ext.plus(ext.mul(a, s))))
        # star fixed point on the ideal
        st = ext.partial_star(a)
        check("star_fixed_point_ideal", (a,), ext.add(ext.mul(a, st), ext.one), st)
        if len(report.failures) >= 20:
            break
    return report


# --- omega on the extension ---------------------------------------------------------

class ExtensionPair:
    """Omega for formal sums: (x + a)^omega = (x* a)* x^omega + (x* a)^omega.

    Needs a star on the scalar side, an omega H -> V, an explicitly supplied
    scalar omega S0 -> V (the pair records this choice), and compatible left
    actions of both sides on V.
    """

    def __init__(self, ext: ExtensionAlgebra, module, h_act, h_omega,
                 s0_act, s0_omega, scalar_omega_note="supplied per instance",
                 validate_samples=200, seed=DEFAULT_SEED, name=None):
        if not has_star(ext.s0):
            raise ExtensionError("extension omega needs a star on the scalar side")
        self.ext = ext
        self.module = module
        self.h_act = h_act
        self.h_omega = h_omega
        self.s0_act = s0_act
        self.s0_omega = s0_omega
        self.scalar_omega_note = scalar_omega_note
        self.name = name or f"{ext.name}-pair"
        if validate_samples:
            self._validate(validate_samples, seed)

    def manifest(self) -> dict:
        """What this pair was built from, including the scalar-omega choice,
        which no general principle fixes and must be declared per instance."""
        return {"pair": self.name, "scalar_omega": self.scalar_omega_note}

    def act(self, s: FormalSum, v):
        return self.module.add(self.s0_act(s.scalar, v), self.h_act(s.ideal, v))

    def omega(self, s: FormalSum):
        ext, V = self.ext, self.module
        xs = ext.s0.star(s.scalar)
        t = ext.bi.left(xs, s.ideal)             # x* a
        xo = self.s0_omega(s.scalar)
        starred = V.add(self.h_act(ext.h.plus(t), xo), xo)   # (x* a)* x^omega
        return V.add(starred, self.h_omega(t))

    def _validate(self, samples, seed):
        rng = random.Random(seed)
        ext, V = self.ext, self.module
        s0, h, bi = ext.s0, ext.h, ext.bi
        for _ in range(samples):
            x = s0.sample(rng)
            a = h.sample(rng)
            v = self.module.sample(rng)
            checks = [
                ("omega_compat", self.h_omega(bi.left(x, a)),
                 self.s0_act(x, self.h_omega(bi.right(a, x)))),
                ("act_compat_left", self.h_act(bi.left(x, a), v),
                 self.s0_act(x, self.h_act(a, v))),
                ("act_compat_right", self.h_act(bi.right(a, x), v),
                 self.h_act(a, self.s0_act(x, v))),
            ]
            for name, lhs, rhs in checks:
                if not V.eq(lhs, rhs):
                    raise ExtensionError(
                        f"{name} fails at x={s0.show(x)} a={h.show(a)}: "
                        f"{V.show(lhs)} != {V.show(rhs)}")


# --- morphisms -------------------------------------------------------------------------

class ExtensionMorphism:
    """tau(x + a) = phi(x) + psi(a), validated to be compatible and homomorphic."""

    def __init__(self, source: ExtensionAlgebra, target: ExtensionAlgebra,
                 phi, psi, validate_samples=200, seed=DEFAULT_SEED):
        self.source = source
        self.target = target
        self.phi = phi
        self.psi = psi
        if validate_samples:
            self._validate(validate_samples, seed)

    def __call__(self, s: FormalSum) -> FormalSum:
        return FormalSum(self.phi(s.scalar), self.psi(s.ideal))

    def _validate(self, samples, seed):
        rng = random.Random(seed)
        src, tgt = self.source, self.target
        for _ in range(samples):
            x = src.s0.sample(rng)
            a = src.h.sample(rng)
            lhs = tgt.bi.left(self.phi(x), self.psi(a))
            rhs = self.psi(src.bi.left(x, a))
            if not tgt.h.eq(lhs, rhs):
                raise ExtensionError(
                    f"morphism compatibility (scalar·ideal) fails at "
                    f"x={src.s0.show(x)} a={src.h.show(a)}: "
                    f"{tgt.h.show(lhs)} != {tgt.h.show(rhs)}")
            lhs = tgt.bi.right(self.psi(a), self.phi(x))
            rhs = self.psi(src.bi.right(a, x))
            if not tgt.h.eq(lhs, rhs):
                raise ExtensionError(
                    f"morphism compatibility (ideal·scalar) fails at "
                    f"x={src.s0.show(x)} a={src.h.show(a)}: "
                    f"{tgt.h.show(lhs)} != {tgt.h.show(rhs)}")

    def homomorphism_report(self, trials=200, seed=DEFAULT_SEED) -> LawReport:
        rng = random.Random(seed)
        src, tgt = self.source, self.target
        report = LawReport("extension-morphism", 0)

        def check(name, args, lhs, rhs):
            report.trials += 1
            if not tgt.eq(lhs, rhs):
                report.failures.append(LawFailure(
                    name, tuple(src.show(v) for v in args), tgt.show(lhs), tgt.show(rhs)))

        check("preserves_zero", (), self(src.zero), tgt.zero)
        check("preserves_one", (), self(src.one), tgt.one)
        for _ in range(trials):
            s, t = src.sample(rng), src.sample(rng)
            check("preserves_add", (s, t), self(src.add(s, t)), tgt.add(self(s), self(t)))
            check("preserves_mul", (s, t), self(src.mul(s, t)), tgt.mul(self(s), self(t)))
            a = src.sample_ideal(rng)
            img = self(a)
            report.trials += 1
            if not tgt.is_ideal(img):
                report.failures.append(LawFailure(
                    "preserves_ideal", (src.show(a),), tgt.show(img), "an ideal element"))
            check("preserves_ideal_star", (a,),
                  self(src.partial_star(a)), tgt.partial_star(img))
            if len(report.failures) >= 20:
                break
        return report


# --- natural-action consequences ------------------------------------------------------

def nat_omega_commutation_report(pair, n_max=5, trials=60, seed=DEFAULT_SEED) -> LawReport:
    """omega(n·a) = a · omega(n·a) for the natural action, sampled over a and n.

    Since the natural action is central (a·n = n·a = the n-fold sum), this
    is the omega-commutation consequence of the action: both readings of
    (an)^omega = a(na)^omega collapse to the same checkable equation.
    """
    rng = random.Random(seed)
    H, V = pair.hemiring, pair.module
    report = LawReport("nat-omega-commutation", 0)
    for _ in range(trials):
        a = H.sample(rng)
        n = rng.randrange(0, n_max + 1)
        na = H.nat_act(n, a)
        lhs = pair.omega(na)
        rhs = pair.act(a, pair.omega(na)) if n > 0 else V.zero
        report.trials += 1
        if not V.eq(lhs, rhs):
            report.failures.append(LawFailure(
                "nat_omega", (H.show(a), str(n)), V.show(lhs), V.show(rhs)))
    return report
