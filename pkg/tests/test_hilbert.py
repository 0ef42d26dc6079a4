import itertools
import random

import pytest

from symtensor.errors import IntegrityError
from symtensor.hilbert import (HilbertSeries, MonomialIdeal,
                               count_standard_monomials, krull_dim,
                               minimalize_monomials, series_eq,
                               series_from_generator_degrees,
                               series_from_monomial_ideal, series_product)


def test_minimalization():
    gens = [(2, 0), (2, 1), (0, 1), (0, 2)]
    assert minimalize_monomials(gens) == ((0, 1), (2, 0))
    ideal = MonomialIdeal.from_generators(2, gens)
    assert ideal.gens == ((0, 1), (2, 0))


def test_series_from_monomial_ideal_examples():
    zero_ideal = MonomialIdeal.from_generators(2, [])
    assert series_from_monomial_ideal(zero_ideal).expand(5) == (1, 2, 3, 4, 5, 6)

    ad2 = MonomialIdeal.from_generators(4, [(1, 0, 0, 0), (0, 0, 0, 2)])
    assert series_from_monomial_ideal(ad2).expand(4) == (1, 3, 5, 7, 9)

    square = MonomialIdeal.from_generators(2, [(2, 0), (1, 1), (0, 2)])
    series = series_from_monomial_ideal(square)
    assert series.numerator == (1, 0, -3, 2)    # 1 - 3t^2 + 2t^3
    assert series.expand(5) == (1, 2, 0, 0, 0, 0)


def test_unit_ideal_is_zero_series():
    unit = MonomialIdeal.from_generators(3, [(0, 0, 0)])
    assert series_from_monomial_ideal(unit).expand(3) == (0, 0, 0, 0)


def test_series_from_generator_degrees_examples():
    assert series_from_generator_degrees([1, 1]).expand(3) == (1, 2, 3, 4)
    assert series_from_generator_degrees([2, 2, 2]).expand(6) == (1, 0, 3, 0, 6, 0, 10)
    s = series_from_generator_degrees([4, 4, 6], 12)
    assert s.expand(12) == (1, 0, 0, 0, 2, 0, 1, 0, 3, 0, 2, 0, 4)


def test_expand_examples():
    assert HilbertSeries((1,), (1, 1)).expand(3) == (1, 2, 3, 4)
    assert HilbertSeries((1, 1), (1,)).expand(4) == (1, 2, 2, 2, 2)
    assert HilbertSeries((1, 0, 0, 0, -1), (1, 1, 2)).expand(4) == (1, 2, 4, 6, 8)
    with pytest.raises(IntegrityError):
        HilbertSeries((1, -2), ()).expand(3)
    with pytest.raises(ValueError):
        HilbertSeries((1,), ()).expand(-1)


def test_series_product_examples():
    line = HilbertSeries((1, 1), (1, 1))   # (1+t)/(1-t)^2, dims 1,3,5,...
    prod = series_product(line, line)
    assert prod.expand(1)[1] == 6
    assert series_eq(series_product(line, HilbertSeries.one()), line)
    geom = HilbertSeries((1,), (1,))
    assert series_product(geom, geom).expand(3) == (1, 2, 3, 4)


def test_krull_dim_examples():
    assert krull_dim(HilbertSeries((1,), (2, 2, 2))) == 3
    assert krull_dim(HilbertSeries.one()) == 0
    assert krull_dim(HilbertSeries((1, 0, -1), (1, 1))) == 1


def test_series_eq_examples():
    a = HilbertSeries((1, 1), (1,))
    b = HilbertSeries((1, 0, -1), (1, 1))
    assert series_eq(a, b)
    assert not series_eq(HilbertSeries((1,), (1,)), HilbertSeries((1,), (2,)))
    e12 = [1] + [0] * 11 + [-1]
    assert series_eq(HilbertSeries(tuple(e12), (6, 4, 4)),
                     HilbertSeries(tuple(e12), (4, 6, 4)))


def _random_ideal(rng):
    nvars = rng.randint(1, 5)
    gens = []
    for _ in range(rng.randint(1, 6)):
        total = rng.randint(1, 4)
        exps = [0] * nvars
        for _ in range(total):
            exps[rng.randrange(nvars)] += 1
        gens.append(tuple(exps))
    return MonomialIdeal.from_generators(nvars, gens)


def test_series_matches_brute_force_on_random_ideals():
    rng = random.Random(314159)
    for _ in range(25):
        ideal = _random_ideal(rng)
        got = series_from_monomial_ideal(ideal).expand(8)
        want = tuple(count_standard_monomials(ideal, d) for d in range(9))
        assert got == want, f"{ideal.gens} in {ideal.nvars} vars"


def test_krull_dim_of_zero_ideal_and_canonical_invariance():
    for k in range(1, 6):
        series = series_from_monomial_ideal(MonomialIdeal.from_generators(k, []))
        assert series.krull_dim() == k
    s = HilbertSeries((1, 0, -1), (1, 1, 2))
    assert s.canonical().krull_dim() == s.krull_dim()
    klein = HilbertSeries(tuple([1] + [0] * 11 + [-1]), (4, 4, 6))
    assert klein.canonical().krull_dim() == klein.krull_dim() == 2


def _independent_set_dimension(ideal):
    """Largest variable subset containing no generator's support."""
    best = 0
    for size in range(ideal.nvars, -1, -1):
        for subset in itertools.combinations(range(ideal.nvars), size):
            sset = set(subset)
            if all(not set(v for v, e in enumerate(g) if e) <= sset for g in ideal.gens):
                return size
    return best


def test_krull_dim_matches_independent_set_oracle():
    rng = random.Random(2718)
    for _ in range(25):
        ideal = _random_ideal(rng)
        series = series_from_monomial_ideal(ideal)
        assert series.krull_dim() == _independent_set_dimension(ideal)


def test_product_expansion_is_convolution():
    rng = random.Random(55)
    for _ in range(30):
        degrees = [rng.randint(1, 4) for _ in range(rng.randint(1, 4))]
        # a relation of degree divisible by one generator keeps dims non-negative
        relation = rng.choice([None, degrees[0] * rng.randint(2, 3)])
        a = series_from_generator_degrees(degrees, relation)
        b = series_from_generator_degrees(
            [rng.randint(1, 4) for _ in range(rng.randint(1, 4))])
        ca, cb = a.expand(10), b.expand(10)
        conv = tuple(sum(ca[i] * cb[d - i] for i in range(d + 1)) for d in range(11))
        assert (a * b).expand(10) == conv


def test_canonical_form():
    s = HilbertSeries((1, 0, -1), (1, 1))         # (1-t^2)/(1-t)^2
    c = s.canonical()
    assert c.numerator == (1, 1) and c.den_weights == (1,)
    assert series_eq(s, c)


def test_render_and_json():
    s = HilbertSeries(tuple([1] + [0] * 11 + [-1]), (4, 4, 6))
    assert s.render() == "(1 - t^12) / ((1 - t^4)^2 (1 - t^6))"
    assert s.to_json_dict() == {"numerator": [1] + [0] * 11 + [-1],
                                "denominator_weights": [4, 4, 6]}
    assert HilbertSeries.one().render() == "1"
