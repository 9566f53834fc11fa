from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cayleygr.exact import GaussianRational
from cayleygr.octonions import OrbitType, Subspace, classify, norm_bilinear
from cayleygr.weightmodel import (
    ALPHA,
    BETA,
    GAMMA,
    PRODUCT_FORM_SCALAR,
    ROOT_SYSTEM,
    SplitVector,
    U,
    BASIS_WEIGHTS,
    Weight,
    g2_irrep_dim,
    g2_irrep_dim_character_oracle,
    gl7_schur_dim,
    gl7_schur_dim_tableau_oracle,
    model_bridge,
    omega_split,
    parse_weight,
    q_split,
    split_product,
    weight_str,
)


def test_weight_arithmetic_and_names():
    assert ALPHA + BETA + GAMMA == Weight(0, 0)
    assert weight_str(ALPHA - GAMMA) == "a-g"
    assert parse_weight("-2b") == Weight(0, -2)
    assert (ALPHA - BETA).pair((1, 2)) == -1


def test_q_split_values():
    one = GaussianRational(1)
    assert q_split(U[0], U[0]) == one
    assert q_split(U[1], U[2]) == GaussianRational(Fraction(1, 2))
    assert q_split(U[1], U[3]) == 0
    assert q_split(U[1], U[1]) == 0


def test_omega_split_values():
    assert omega_split(U[0], U[1], U[2]) == 1
    assert omega_split(U[1], U[3], U[5]) == 1
    assert omega_split(U[1], U[3], U[6]) == 0
    # alternating
    assert omega_split(U[1], U[0], U[2]) == -1
    assert omega_split(U[0], U[0], U[2]) == 0


def _weight_of_index(i):
    return BASIS_WEIGHTS[i]


def test_split_product_weight_additivity():
    for i in range(7):
        for j in range(7):
            p = split_product(U[i], U[j])
            nz = [k for k in range(7) if p[k]]
            if not nz:
                continue
            assert len(nz) == 1
            assert _weight_of_index(nz[0]) == _weight_of_index(i) + _weight_of_index(j)


def test_split_product_examples():
    p = split_product(U[1], U[2])
    assert [k for k in range(7) if p[k]] == [0]
    p = split_product(U[1], U[3])
    assert [k for k in range(7) if p[k]] == [6]
    # the span of u0, u_a, u_-a is closed under the product
    span = (0, 1, 2)
    for i in span:
        for j in span:
            p = split_product(U[i], U[j])
            assert all(not p[k] for k in range(7) if k not in span)


split_vectors = st.lists(
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=7, max_size=7
).map(lambda cs: SplitVector([GaussianRational(a, b) for a, b in cs]))


@given(split_vectors, split_vectors, split_vectors)
@settings(max_examples=30, deadline=None)
def test_product_is_q_compatible_with_omega(x, y, z):
    # q(x y, z) equals the fixed multiple of omega(x, y, z), hence alternating
    lhs = q_split(split_product(x, y), z)
    assert lhs == PRODUCT_FORM_SCALAR * omega_split(x, y, z)
    assert q_split(split_product(x, x), z) == 0
    assert q_split(split_product(x, y), y) == PRODUCT_FORM_SCALAR * omega_split(x, y, y)


@given(split_vectors, split_vectors)
@settings(max_examples=30, deadline=None)
def test_extended_product_is_composition(x, y):
    # (a, x)(b, y) = (ab - q(x,y), ay + bx + xy) must multiply norms
    a, b = GaussianRational(2, 1), GaussianRational(1, -1)
    re = a * b - q_split(x, y)
    im = y.scale(a) + x.scale(b) + split_product(x, y)
    lhs = re * re + q_split(im, im)
    rhs = (a * a + q_split(x, x)) * (b * b + q_split(y, y))
    assert lhs == rhs


def test_model_bridge():
    images, lam = model_bridge()
    assert lam == GaussianRational(0, Fraction(-1, 2))
    # q preserved: norms of images match the split Gram
    assert norm_bilinear(images[0], images[0]) == 1
    assert norm_bilinear(images[1], images[2]) == GaussianRational(Fraction(1, 2))
    sub = Subspace([images[0], images[1], images[2]])
    assert classify(sub) is OrbitType.NON_DEGENERATE


def test_root_system_invariants():
    rs = ROOT_SYSTEM
    a1, a2 = rs.simple
    assert 3 * a1 + 2 * a2 == rs.highest_long
    assert 2 * a1 + a2 == rs.highest_short
    assert len(rs.short_roots) == 6 and len(rs.long_roots) == 6
    for r in rs.positive_roots():
        assert r.pair((1, 2)) > 0
    # short roots have square length 2, long roots 6
    assert {rs.inner(r, r) for r in rs.short_roots} == {2}
    assert {rs.inner(r, r) for r in rs.long_roots} == {6}


def test_gl7_schur_dims():
    assert gl7_schur_dim((1,)) == 7
    assert gl7_schur_dim((1, 1, 1)) == 35
    assert gl7_schur_dim((2,)) == 28
    assert gl7_schur_dim(()) == 1
    with pytest.raises(ValueError):
        gl7_schur_dim((1, 2))


def test_gl7_schur_dim_against_tableau_oracle():
    shapes = []
    for a in range(4):
        for b in range(a + 1):
            for c in range(b + 1):
                for d in range(c + 1):
                    shapes.append(tuple(p for p in (a, b, c, d) if p))
    for shape in set(shapes):
        assert gl7_schur_dim(shape) == gl7_schur_dim_tableau_oracle(shape), shape


def test_g2_irrep_dims():
    assert g2_irrep_dim(1, 0) == 7
    assert g2_irrep_dim(0, 1) == 14
    assert g2_irrep_dim(2, 0) == 27
    with pytest.raises(ValueError):
        g2_irrep_dim(-1, 0)


def test_g2_irrep_dim_against_character_oracle():
    for a in range(7):
        for b in range(3):
            if a + 3 * b <= 6:
                assert g2_irrep_dim(a, b) == g2_irrep_dim_character_oracle(a, b), (a, b)
