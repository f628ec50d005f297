import pytest

import ringcount


def test_binomials():
    assert ringcount.gaussian_binomial(3, 2, 4) == 21
    assert ringcount.chain_binomial(2, 1, 2, 2) == 6
    # big values come back as python ints
    assert ringcount.gaussian_binomial(40, 20, 2) > 2**300
    assert ringcount.kappa(3, 2) == 2


def test_restriction_of_the_counterexample():
    assert ringcount.restrict("gf:2", 2, "(1,0,a);(0,1,b)") == "{000, 111}"


def test_counts_over_f4():
    assert ringcount.aleph("gf:2", 2, 3, 2) == 14
    assert ringcount.aleph("gf:2", 2, 2, 2, source="formula") == 9
    assert ringcount.omega_histogram("gf:2", 2, 3, 2) == {1: 14, 2: 7}
    assert ringcount.omega("gf:2", 2, 3, 2, 2) == 7


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        ringcount.restrict("gf:6", 2, "(1)")
    with pytest.raises(ringcount.ParseError):
        ringcount.restrict("gf:2", 2, "(1,0);(1)")
    with pytest.raises(ValueError):
        ringcount.aleph("gf:2", 2, 2, 2, source="guess")


def test_cli_entry_point():
    code, out, err = ringcount.run(["binomial", "--ring", "gf:4", "--len", "3", "--k", "3", "--kp", "2"])
    assert code == 0, err
    assert out.strip() == "21"
    code, _, err = ringcount.run(["enum", "--ring", "nope"])
    assert code == 64
    assert err.startswith("error:")
