from fractions import Fraction

import pytest

import hyperdet

QUARTIC_TERMS = 12


def test_classify():
    assert hyperdet.classify([2, 2, 3])["class"] == "boundary"
    assert hyperdet.classify([2, 2, 2])["class"] == "inner"
    info = hyperdet.classify([2, 2, 5])
    assert info["class"] == "grassman"
    assert info["distinguished"] == 2
    assert hyperdet.classify([2, 2, 3])["m_sequence"] == [1, 2, 3, 5]


def test_symbolic_cayley():
    text = hyperdet.det([2, 2, 2])
    assert text.count("a[") == 40
    assert text.startswith("a[1,2,2]^2*a[2,1,1]^2")
    assert len(text.replace("-", "+").split("+")) == QUARTIC_TERMS


def test_numeric_det_is_fraction():
    assert hyperdet.det([2, 2], [1, 2, 3, 4]) == -2
    assert hyperdet.det([2, 2], ["1/2", 0, 0, Fraction(2, 3)]) == Fraction(1, 3)
    assert isinstance(hyperdet.det([3, 3], list(range(9))), Fraction)


def test_degenerate_samples_vanish():
    for seed in range(5):
        entries, witness = hyperdet.make_degenerate([2, 2, 3], seed)
        assert len(entries) == 12
        assert [len(w) for w in witness] == [2, 2, 3]
        assert hyperdet.det([2, 2, 3], entries) == 0
    assert hyperdet.make_degenerate([2, 2, 2], 7) == hyperdet.make_degenerate([2, 2, 2], 7)


def test_threads_do_not_change_results():
    assert hyperdet.det([2, 3, 2], threads=1) == hyperdet.det([2, 3, 2], threads=4)


def test_counts_and_degrees():
    assert hyperdet.degree_boundary([2, 2, 2, 4]) == 24
    assert hyperdet.term_count([3, 3]) == 6
    assert hyperdet.diagonal_monomial([3], "boundary") == "a[1,1]*a[2,2]*a[3,3]"


def test_closed_det_zero_entry():
    assert hyperdet.closed_det([2, 2], [1, 0, 3, 4]) == 0


def test_plucker_and_corank():
    coords, vanish = hyperdet.hyperplucker([2, 2, 5], [(i * 7) % 11 - 5 for i in range(20)])
    assert len(coords) == 10
    assert coords[0][0] == (1, 2, 3)
    assert not vanish
    entries = [0] * 16
    entries[0] = entries[13] = 1
    assert hyperdet.corank_22n([2, 2, 4], entries) == (2, True)


def test_errors():
    with pytest.raises(hyperdet.HyperdetError, match="GrassmanFormat"):
        hyperdet.det([2, 2, 5])
    with pytest.raises(hyperdet.HyperdetError, match="SizeGuard"):
        hyperdet.det([2, 3, 4], max_terms=10)
    with pytest.raises(ValueError):
        hyperdet.det([2, 2], [1, 2, 3])


def test_calibration_selects_default():
    reports = hyperdet.calibrate()
    assert len(reports) == 8
    passing = [name for name, ok, _ in reports if ok]
    assert "tailSigmaQ/sigmaQ/shifted" in passing
