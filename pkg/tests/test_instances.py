"""The concrete carriers and their codecs."""

import math

import pytest

from omegalg.instances import INF, NEG_INF, make_instance


def test_make_instance_names():
    for name in ("bool", "nat", "minplus", "extreal", "lattice"):
        c = make_instance(name)
        assert c.name == name


def test_unknown_instance_rejected():
    with pytest.raises(ValueError):
        make_instance("nosuch")


def test_lattice_params_validated():
    with pytest.raises(ValueError):
        make_instance("lattice", base=6)


def test_boolean_is_conway(boolean):
    assert boolean.star(True) is True and boolean.star(False) is True
    assert boolean.add(False, True) is True
    assert boolean.mul(True, False) is False


def test_minplus_examples(minplus):
    assert minplus.mul(3, INF) == INF
    assert minplus.add(3, 5) == 3
    assert minplus.one == 0 and minplus.zero == INF
    assert minplus.star(7) == 0
    assert minplus.plus(7) == 7


def test_minplus_saturates_at_cap():
    c = make_instance("minplus", cap=100)
    assert c.mul(60, 60) == 100
    assert c.mul(60, INF) == INF
    # associativity survives saturation
    assert c.mul(c.mul(60, 60), 60) == c.mul(60, c.mul(60, 60)) == 100


def test_lattice_meet_join(lattice):
    ab = frozenset("ab")
    bc = frozenset("bc")
    assert lattice.mul(ab, bc) == frozenset("b")
    assert lattice.add(ab, bc) == frozenset("abc")
    assert lattice.star(ab) == lattice.one
    assert lattice.show(frozenset("ca")) == "{a,c}"
    assert lattice.read("{a,c}") == frozenset("ac")


def test_extreal_monoid():
    e = make_instance("extreal")
    assert e.zero == NEG_INF
    assert e.add(NEG_INF, 3.0) == 3.0
    assert e.add(2.0, INF) == INF
    assert e.eq(1.0, 1.0 + 1e-12)
    assert not e.eq(1.0, 1.01)
    assert e.eq(INF, INF) and not e.eq(INF, NEG_INF)
    assert e.show(INF) == "inf" and e.show(NEG_INF) == "-inf"
    assert e.read("inf") == INF and e.read("2.5") == 2.5


def test_nat_has_no_star(nat):
    assert not hasattr(nat, "star")
    assert nat.mul(3, 4) == 12 and nat.add(3, 4) == 7


def test_codecs_round_trip(boolean, minplus, nat):
    assert boolean.read(boolean.show(True)) is True
    assert minplus.read(minplus.show(INF)) == INF
    assert minplus.read(minplus.show(5)) == 5
    assert nat.read(nat.show(9)) == 9


def test_omega_values(boolean, minplus, lattice):
    assert boolean.omega(True) is True and boolean.omega(False) is False
    assert minplus.omega(0) == 0 and minplus.omega(3) == INF
    assert lattice.omega(frozenset("ab")) == frozenset("ab")


def test_lattice_elements_complete(lattice):
    elems = lattice.elements()
    assert len(elems) == 8
    assert lattice.zero in elems and lattice.one in elems


def test_extreal_sampler_stays_in_domain():
    import random
    e = make_instance("extreal")
    rng = random.Random(1)
    for _ in range(200):
        v = e.sample(rng)
        assert v == NEG_INF or v == INF or (0 <= v and not math.isnan(v))
