from hyperarr.polynomials import (
    add,
    degree,
    evaluate,
    format_poly,
    from_roots,
    monic_linear_roots,
    multiply,
    subtract,
    trim,
)


def test_trim_strips_leading_zeros_only():
    assert trim([1, 2, 0, 0]) == (1, 2)
    assert trim([0, 0]) == (0,)
    assert trim([]) == (0,)


def test_arithmetic():
    assert add((1, 2), (3,)) == (4, 2)
    assert subtract((1, 2), (1, 2)) == (0,)
    assert multiply((1, 1), (1, 1)) == (1, 2, 1)
    assert multiply((0,), (5, 7)) == (0,)


def test_evaluate_and_degree():
    p = (3, -4, 1)  # (t-1)(t-3)
    assert evaluate(p, 1) == 0 and evaluate(p, 3) == 0
    assert evaluate(p, -1) == 8
    assert degree(p) == 2
    assert degree((7,)) == 0


def test_from_roots_round_trips_with_monic_linear_roots():
    for roots in [(1, 3), (1, 3, 3), (1, 3, 3, 5), (1, 5, 5, 5, 5), (0, 0, 2)]:
        p = from_roots(roots)
        assert monic_linear_roots(p) == tuple(sorted(roots))


def test_monic_linear_roots_rejects_non_splitting():
    # t^2 + 1 and t^2 - 3t + 3 have no integer roots
    assert monic_linear_roots((1, 0, 1)) is None
    assert monic_linear_roots((3, -3, 1)) is None
    # non-monic input never certifies
    assert monic_linear_roots((2, 4)) is None
    # negative roots are not exponents
    assert monic_linear_roots(from_roots((-1, 2))) is None


def test_format_poly():
    assert format_poly((3, -4, 1)) == "t^2 - 4t + 3"
    assert format_poly((0, 1)) == "t"
    assert format_poly((0,)) == "0"
    assert format_poly((1, 1), var="q") == "q + 1"
