from fractions import Fraction

import pytest

from brauercat.category import Morphism, e_sum
from brauercat.matchings import (Diagram, PerfectMatching, bend,
                                 enumerate_matchings, enumerate_X,
                                 find_mutually_crossing)
from brauercat.pfaffian import (PfGenerator, enumerate_pf_generators,
                                find_violation, normal_form, pfaffian,
                                rewrite_step)
from oracles import double_factorial

PM = PerfectMatching


def flat(pairs):
    pm = PM(pairs)
    return Diagram(0, pm.n_points, pm)


def test_generator_validation():
    with pytest.raises(ValueError, match="subset"):
        PfGenerator(1, 6, (1, 2, 3), ((4, 5),))
    with pytest.raises(ValueError, match="partition"):
        PfGenerator(1, 6, (1, 2, 3, 4), ((4, 5),))


@pytest.mark.parametrize("n", [1, 2])
def test_pfaffian_term_count(n):
    points = 2 * (n + 1)
    g = PfGenerator(n, points, tuple(range(1, points + 1)), ())
    pf = pfaffian(g)
    assert len(pf.terms) == double_factorial(2 * n + 1)
    assert all(c == 1 for c in pf.terms.values())


def test_pfaffian_is_bent_idempotent_sum():
    # the all-diagram average on n+1 strands equals the empty-rest generator
    # after flattening, up to the (n+1)! normalization
    for n in (1, 2):
        e = e_sum(n)
        flattened = Morphism(0, 2 * (n + 1),
                             {bend(d): c for d, c in e.terms.items()})
        g = PfGenerator(n, 2 * (n + 1), tuple(range(1, 2 * (n + 1) + 1)), ())
        import math
        assert pfaffian(g).scaled(Fraction(1, math.factorial(n + 1))) == flattened


def test_enumerate_generators():
    gens = list(enumerate_pf_generators(1, 6))
    assert len(gens) == 15  # C(6,4) subsets times the single matching of 2 points
    assert len(set(gens)) == 15
    assert list(enumerate_pf_generators(2, 4)) == []


def test_find_violation():
    assert find_violation(flat(((1, 2), (3, 4))), 1) is None
    assert find_violation(flat(((1, 3), (2, 4))), 1) == ((1, 3), (2, 4))
    assert find_violation(flat(((1, 4), (2, 5), (3, 6))), 2) == ((1, 4), (2, 5), (3, 6))


def test_rewrite_step_example():
    d = flat(((1, 3), (2, 4)))
    out = rewrite_step(d, ((1, 3), (2, 4)))
    assert out == Morphism(0, 4, {flat(((1, 2), (3, 4))): -1,
                                  flat(((1, 4), (2, 3))): -1})


def test_rewrite_step_term_count_and_measure():
    for n, points in ((1, 6), (1, 8), (2, 8)):
        for pm in enumerate_matchings(points):
            d = Diagram(0, points, pm)
            v = find_violation(d, n)
            if v is None:
                continue
            out = rewrite_step(d, v)  # internally asserts the crossing decrease
            assert len(out.terms) == double_factorial(2 * n + 1) - 1


def test_rewrite_step_rejects_noncrossing_subset():
    d = flat(((1, 2), (3, 4)))
    with pytest.raises(ValueError, match="cross"):
        rewrite_step(d, ((1, 2), (3, 4)))


def test_normal_form_fixed_point():
    for r, n in [(2, 1), (3, 1), (3, 2)]:
        for pm in enumerate_X(r, n):
            m = Morphism.from_diagram(Diagram(0, 2 * r, pm))
            assert normal_form(m, n) == m


def test_normal_form_single_step():
    m = Morphism.from_diagram(flat(((1, 3), (2, 4))))
    assert normal_form(m, 1) == Morphism(
        0, 4, {flat(((1, 2), (3, 4))): -1, flat(((1, 4), (2, 3))): -1})


def test_normal_form_support_is_noncrossing():
    for n, points in ((1, 6), (2, 8)):
        for pm in enumerate_matchings(points):
            m = Morphism.from_diagram(Diagram(0, points, pm))
            reduced = normal_form(m, n)
            for d in reduced.terms:
                assert find_mutually_crossing(d.matching, n + 1) is None


def test_normal_form_idempotent_and_linear():
    for pm_a, pm_b in [(((1, 3), (2, 4)), ((1, 2), (3, 4))),
                       (((1, 4), (2, 6), (3, 5)), ((1, 5), (2, 4), (3, 6)))]:
        a = Morphism.from_diagram(flat(pm_a))
        b = Morphism.from_diagram(flat(pm_b))
        combo = a.scaled(3) + b.scaled(Fraction(-1, 2))
        nf = normal_form(combo, 1)
        assert normal_form(nf, 1) == nf
        assert nf == normal_form(a, 1).scaled(3) + normal_form(b, 1).scaled(Fraction(-1, 2))


def test_normal_form_bends_other_shapes():
    from brauercat.category import generator_s, generator_u
    s = Morphism.from_diagram(generator_s(1, 2))
    reduced = normal_form(s, 1)
    assert (reduced.r, reduced.s) == (2, 2)
    # the crossing strand pattern rewrites into the two flat diagrams
    u = Morphism.from_diagram(generator_u(1, 2))
    ident = Morphism.identity(2)
    assert reduced == -(u + ident)
    assert normal_form(u, 1) == u


def test_trace_hook():
    steps = []
    normal_form(Morphism.from_diagram(flat(((1, 4), (2, 5), (3, 6)))), 1, steps)
    assert steps and all(isinstance(d, Diagram) for d in steps)
