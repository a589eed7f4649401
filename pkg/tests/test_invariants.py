import random
from fractions import Fraction

import pytest

from novikov.complexes import OneCocycle, validate_cocycle
from novikov.corpus import (alexander_style_instance, circle, connected_sum,
                            sphere_product, surface, torus)
from novikov.errors import NotInSpan
from novikov.invariants import (crit_bound, cup_length, default_candidates,
                                jump_locus, novikov_numbers, report_json,
                                thm3_bound, twisted_dims)
from novikov.numfield import NumberField
from novikov.polyq import Poly


def test_novikov_numbers_known_spaces():
    assert novikov_numbers(circle(3).complex, circle(3).cocycle) == [0, 0]
    s = surface(2)
    assert novikov_numbers(s.complex, s.cocycle) == [0, 2, 0]
    p = sphere_product(2)
    assert novikov_numbers(p.complex, p.cocycle) == [0, 0, 0, 0]
    t = torus()
    assert novikov_numbers(t.complex, t.cocycle) == [0, 0, 0]


def test_jump_locus_surface():
    s = surface(2)
    report = jump_locus(s.complex, s.cocycle)
    assert report.generic == [0, 2, 0]
    tm1 = Poly([-1, 1])
    dims = {e.q: e.dim for e in report.entries if e.factor == tm1}
    assert dims == {0: 1, 1: 4, 2: 1}
    for e in report.entries:
        assert e.dim > report.generic[e.q]


def test_jump_locus_sphere_product():
    p = sphere_product(2)
    report = jump_locus(p.complex, p.cocycle)
    assert report.generic == [0, 0, 0, 0]
    tm1 = Poly([-1, 1])
    dims = {e.q: e.dim for e in report.entries if e.factor == tm1}
    assert dims == {0: 1, 1: 1, 2: 1, 3: 1}


def test_twisted_dims_match_betti_at_unit():
    for space in (circle(4), torus(), surface(2)):
        dims = twisted_dims(space.complex, space.cocycle, Fraction(1))
        chi = space.complex.euler_characteristic()
        assert sum((-1) ** q * d for q, d in enumerate(dims)) == chi
    s = surface(2)
    assert twisted_dims(s.complex, s.cocycle, Fraction(1)) == [1, 4, 1]
    assert twisted_dims(s.complex, s.cocycle, Fraction(3)) == [0, 2, 0]
    t = torus()
    assert twisted_dims(t.complex, t.cocycle, Fraction(2)) == [0, 0, 0]


def test_twisted_dims_agree_with_jump_report():
    s = surface(3)
    report = jump_locus(s.complex, s.cocycle)
    for e in report.entries:
        if e.factor == Poly([-1, 1]):
            assert twisted_dims(s.complex, s.cocycle, Fraction(1))[e.q] == e.dim


def test_cup_length_surface_with_jump_roots():
    s = surface(2)
    rep = cup_length(s.complex, s.cocycle, [Fraction(2), Fraction(1, 2)],
                     manifold=True)
    assert rep.cl_lower_bound == 2
    assert rep.crit_bound == 1
    cert = rep.certificate
    assert cert is not None
    assert cert.k == 2
    assert [f[1] for f in cert.factors] == [1, 1]
    assert cert.nonunit_count() >= 2
    assert any(w != 0 for w in cert.witness)


def test_cup_length_monotone_in_candidates():
    s = surface(2)
    small = cup_length(s.complex, s.cocycle, [Fraction(2)], manifold=True)
    large = cup_length(s.complex, s.cocycle,
                       [Fraction(2), Fraction(1, 2), Fraction(1)],
                       manifold=True)
    assert large.cl_lower_bound >= small.cl_lower_bound


def test_cup_length_field_candidates():
    # roots of 2 - 3t + 2t^2 are inverse to each other, so the quadratic
    # pairing on a genus-2 surface still closes up at monodromy 1
    field = NumberField([2, -3, 2])
    a = field.generator()
    s = surface(2)
    rep = cup_length(s.complex, s.cocycle, [a, a.inverse()], manifold=True)
    assert rep.cl_lower_bound == 2
    assert rep.certificate is not None
    assert rep.certificate.nonunit_count() >= 2


def test_cup_length_zero_class_reports_untwisted_fallback():
    s = surface(2)
    zero = validate_cocycle(s.complex, {}, default_zero=True)
    rep = cup_length(s.complex, zero, [Fraction(2)])
    assert rep.cl_lower_bound == 0
    assert rep.certificate is None
    assert rep.untwisted_cup_length is not None
    assert rep.untwisted_cup_length >= 2
    assert rep.notes


def test_crit_bound_surface_default_candidates():
    rep = crit_bound(surface(2), seed=0)
    assert rep.cl_lower_bound == 2
    assert rep.crit_bound == 1
    assert rep.mode == "probabilistic"
    assert rep.certificate is not None


def test_crit_bound_deterministic_given_seed():
    a = crit_bound(surface(2), seed=7)
    b = crit_bound(surface(2), seed=7)
    assert a.cl_lower_bound == b.cl_lower_bound
    assert a.certificate.total_degree == b.certificate.total_degree


def test_crit_bound_alexander_instance():
    inst = alexander_style_instance()
    assert novikov_numbers(inst) == [0, 0, 0, 0]
    report = jump_locus(inst)
    assert any(e.factor == Poly([Fraction(1), Fraction(-3, 2), Fraction(1)])
               for e in report.entries)
    rep = crit_bound(inst)
    assert rep.cl_lower_bound == 2
    assert rep.crit_bound == 1
    assert rep.notes


def test_crit_bound_connected_sum():
    x = connected_sum(torus(), torus())
    rep = crit_bound(x, seed=0)
    assert rep.cl_lower_bound >= 2
    assert rep.crit_bound >= 1


def test_default_candidates_closed_under_inverse():
    s = surface(2)
    report = jump_locus(s.complex, s.cocycle)
    cands = default_candidates(report, random.Random(0))
    rationals = [c for c in cands if isinstance(c, Fraction)]
    for c in rationals:
        assert 1 / c in rationals
    assert Fraction(1) in cands


def test_thm3_bound_single_base_matches_crit_bound():
    s = surface(2)
    direct = crit_bound(s.complex, s.cocycle, manifold=True, seed=0)
    via = thm3_bound(s.complex, [s.cocycle], [(1,)], manifold=True, seed=0)
    assert via.cl_lower_bound == direct.cl_lower_bound


def test_thm3_bound_rejects_degenerate_approximants():
    s = surface(2)
    with pytest.raises(NotInSpan):
        thm3_bound(s.complex, [s.cocycle], [(0,)])
    with pytest.raises(NotInSpan):
        thm3_bound(s.complex, [s.cocycle], [(1, 1)])


def test_thm3_bound_scaled_class_keeps_bound():
    s = surface(2)
    rep = thm3_bound(s.complex, [s.cocycle], [(1,), (2,), (-1,)],
                     manifold=True, seed=0)
    assert rep.cl_lower_bound == 2


def test_report_json_shape():
    s = surface(2)
    nov = novikov_numbers(s.complex, s.cocycle)
    jumps = jump_locus(s.complex, s.cocycle)
    rep = crit_bound(s, seed=0)
    doc = report_json(nov, jumps, rep)
    assert doc["novikov"] == [0, 2, 0]
    assert doc["cl_lower_bound"] == 2
    assert doc["crit_bound"] == 1
    assert all(set(e) >= {"q", "factor", "dim"} for e in doc["jumps"])
    assert doc["certificate"]["k"] == 2
