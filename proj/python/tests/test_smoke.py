import cmath
import random
from fractions import Fraction

import pytest

import polysym


def test_parse_and_norm():
    f = polysym.Series("(z+w)^2-2*z*w", dim=2, cap=4)
    assert f == polysym.Series("z^2+w^2", dim=2, cap=4)
    assert f.coefficients() == {(2, 0): Fraction(1), (0, 2): Fraction(1)}
    lower, upper, exact = (f ** 2).wiener_norm()
    assert exact and lower == upper == 4


def test_elementary_rewrite():
    f = polysym.Series("z^2+w^2", cap=2)
    g = f.to_elementary()
    assert g == polysym.ElementarySeries("e1^2-2*e2", cap=2)
    assert str(g) == "e1^2 - 2*e2"
    assert g.expand(2) == f


def test_evaluation_matches_elementary_form():
    f = polysym.Series("z^2+w^2", cap=2)
    g = f.to_elementary()
    z = [0.3 + 0.1j, -0.2 + 0.4j]
    value, bound = f(z)
    assert abs(value - g(polysym.elementary_values(z))) < 1e-14
    assert bound < 1e-14


def test_symmetrize_and_lift():
    f = polysym.Series("z", cap=1)
    assert f.symmetrize() == polysym.Series("(z+w)/2", cap=1)
    assert not f.is_symmetric()
    g = polysym.Series("z^2 - 3*z + 1/2", dim=1, cap=4)
    assert g.lift(3).diagonal() == g


def test_paper_example():
    report = polysym.paper_example(3)
    assert report["norm"] == (Fraction(49, 36), Fraction(49, 36), True)
    assert report["elementary"].coefficients()[(0, 3)] == Fraction(-1, 9)
    assert report["composition_deviation"] < 1e-12


def test_corona():
    fs = [polysym.Series("z+w", cap=4), polysym.Series("2-z-w", cap=4)]
    gs = [polysym.Series("1/2 + (z-w)*(2-z-w)", cap=4), polysym.Series("1/2 - (z-w)*(z+w)", cap=4)]
    assert polysym.verify_bezout(fs, gs)[1] == 0
    sym = polysym.symmetrize_solution(fs, gs)
    assert sym == [polysym.Series("1/2", cap=4)] * 2
    assert polysym.delta_from_solution(sym) == 2
    assert polysym.corona_delta(fs, 32, 4) >= 2 - 1e-9


def test_quotient_geometry():
    z = [0.5, 0.1j]
    assert polysym.quotient_dist(z, z[::-1]) == 0
    assert polysym.canonical(z) == polysym.canonical(z[::-1])
    assert polysym.separating_elementary([0.5, 0.5], [0.25, 0.75]) == 2
    assert polysym.separating_elementary(z, z[::-1]) is None
    assert polysym.contraction_homotopy(1.0, z) == [0, 0]


def test_transvections():
    factors = polysym.factor_constant_sl([[2, 0], [0, 0.5]])
    assert len(factors) == 4
    m = [[1, 0], [0, 1]]
    for i, j, alpha in factors:
        for r in range(2):
            m[r][j - 1] += alpha * m[r][i - 1]
    assert max(abs(m[r][c] - [[2, 0], [0, 0.5]][r][c]) for r in range(2) for c in range(2)) < 1e-12
    samples = polysym.homotopy_residuals([["1", "z+w"], ["0", "1"]], steps=5)
    assert [s[0] for s in samples] == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert all(s[1] < 1e-10 for s in samples)


def test_blaschke_modulus():
    rng = random.Random(5)
    for _ in range(200):
        z = cmath.rect(rng.random() ** 0.5, 2 * cmath.pi * rng.random())
        for rule in ("varying", "fixed"):
            assert abs(polysym.blaschke_eval(rng.randint(1, 8), z, rule)) <= 1 + 1e-12


def test_errors():
    with pytest.raises(polysym.ParseError):
        polysym.Series("z+*w")
    with pytest.raises(polysym.PreconditionError):
        polysym.Series("z").to_elementary()
    with pytest.raises(polysym.PreconditionError):
        polysym.blaschke_eval(1, 2.0)
    assert issubclass(polysym.ParseError, polysym.Error)
