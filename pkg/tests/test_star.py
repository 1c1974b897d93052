import numpy as np
import pytest

from staralg import (
    Degenerate,
    HermitianForm,
    NotAGroup,
    NotHermitian,
    NotInvolutive,
    Polynomial,
    SemigroupTable,
    StarStructure,
    adjoint_from_form,
    apply_star,
    check_star_isometry,
    classify_star,
    conj_star,
    conj_transpose_star,
    cyclic_group,
    entrywise_conj_binvolution,
    eval_element,
    function_algebra,
    generated_star_subalgebra,
    group_involution,
    hausdorff,
    invert,
    is_self_adjoint,
    matrix_algebra,
    selfadjoint_parts,
    semigroup_algebra,
    spectrum,
    symmetric_group,
)
from staralg.algebra import left_regular_rep
from staralg.catalog import coeffs_to_matrix, matrix_to_coeffs, permutation_index

from conftest import unit_disk

M2 = matrix_algebra(2)


def mat(a, A):
    return a.element(matrix_to_coeffs(A))


def test_apply_star_examples():
    F = function_algebra(["a", "b"])
    np.testing.assert_array_equal(apply_star(conj_star(F), F.element([1 + 1j, 2])).coeffs, [1 - 1j, 2])
    ct = conj_transpose_star(2, M2)
    np.testing.assert_allclose(apply_star(ct, M2.basis(1)).coeffs, M2.basis(2).coeffs, atol=1e-15)
    Z3 = semigroup_algebra(cyclic_group(3))
    np.testing.assert_array_equal(apply_star(group_involution(Z3.semigroup, Z3), Z3.basis(1)).coeffs, [0, 0, 1])


def test_conjugate_linearity(rng):
    s = conj_transpose_star(2, M2)
    x, y = mat(M2, unit_disk(rng, (2, 2))), mat(M2, unit_disk(rng, (2, 2)))
    lam = 0.3 - 1.2j
    np.testing.assert_allclose(apply_star(s, x + y).coeffs, (apply_star(s, x) + apply_star(s, y)).coeffs, atol=1e-14)
    np.testing.assert_allclose(apply_star(s, lam * x).coeffs, (np.conj(lam) * apply_star(s, x)).coeffs, atol=1e-14)


def test_classify_examples():
    F = function_algebra(["a", "b", "c"])
    assert classify_star(F, conj_star(F)).kind == "both"
    assert classify_star(M2, entrywise_conj_binvolution(2, M2)).kind == "binvolution"
    assert classify_star(M2, conj_transpose_star(2, M2)).kind == "involution"
    Z2 = semigroup_algebra(cyclic_group(2))
    assert classify_star(Z2, conj_star(Z2)).kind == "both"
    S3 = semigroup_algebra(symmetric_group(3))
    assert classify_star(S3, conj_star(S3)).kind == "binvolution"
    assert classify_star(S3, group_involution(S3.semigroup, S3)).kind == "involution"


def test_classify_non_involutive():
    rep = classify_star(M2, StarStructure(M2, 2 * np.eye(4)))
    assert not rep.involutive and rep.kind == "neither"


def test_classify_matches_brute_force(rng):
    """Product laws on random (non-basis) elements agree with the basis-pair verdict."""
    for s in (conj_transpose_star(2, M2), entrywise_conj_binvolution(2, M2)):
        rep = classify_star(M2, s)
        x, y = mat(M2, unit_disk(rng, (2, 2))), mat(M2, unit_disk(rng, (2, 2)))
        lhs = apply_star(s, x * y)
        anti = np.linalg.norm((lhs - apply_star(s, y) * apply_star(s, x)).coeffs) < 1e-12
        mult = np.linalg.norm((lhs - apply_star(s, x) * apply_star(s, y)).coeffs) < 1e-12
        assert (anti, mult) == (rep.antimultiplicative, rep.multiplicative)


def test_adjoint_from_form_identity_gram():
    s = adjoint_from_form(2, HermitianForm(np.eye(2)), M2)
    A = np.array([[1 + 2j, 3], [-1j, 4 - 1j]])
    np.testing.assert_allclose(coeffs_to_matrix(apply_star(s, mat(M2, A)).coeffs, 2), A.conj().T, atol=1e-15)


def test_adjoint_from_indefinite_form():
    s = adjoint_from_form(2, HermitianForm(np.diag([1, -1])), M2)
    # G^{-1} E21 G with G = diag(1, -1)
    np.testing.assert_allclose(apply_star(s, M2.basis(1)).coeffs, -M2.basis(2).coeffs, atol=1e-15)
    assert classify_star(M2, s).kind == "involution"


def test_adjoint_defining_identity(rng):
    for G in (np.eye(3), np.diag([1, -1, 2]), np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1]]), None):
        if G is None:
            B = unit_disk(rng, (3, 3))
            G = B + B.conj().T + 3 * np.eye(3)
        form = HermitianForm(G)
        M3 = matrix_algebra(3)
        s = adjoint_from_form(3, form, M3)
        T = unit_disk(rng, (3, 3))
        Ts = coeffs_to_matrix(apply_star(s, mat(M3, T)).coeffs, 3)
        for v in np.eye(3):
            for w in np.eye(3):
                assert abs(form(T @ v, w) - form(v, Ts @ w)) < 1e-12
        assert classify_star(M3, s).kind == "involution"


def test_hermitian_form_validation():
    HermitianForm(np.array([[0, 1], [1, 0]]))
    with pytest.raises(NotHermitian):
        HermitianForm(np.array([[1, 1], [0, 1]]))
    with pytest.raises(Degenerate):
        HermitianForm(np.array([[1, 1], [1, 1]]))


def test_group_involution_s3():
    t = symmetric_group(3)
    S3 = semigroup_algebra(t)
    s = group_involution(t, S3)
    c123 = permutation_index(t, "231")
    c132 = permutation_index(t, "312")
    assert t.mul(c123, c132) == t.identity_index
    np.testing.assert_array_equal(apply_star(s, S3.basis(c123)).coeffs, S3.basis(c132).coeffs)


def test_group_involution_requires_group():
    with pytest.raises(NotAGroup):
        group_involution(SemigroupTable(["θ", "z"], [[0, 1], [1, 1]], 0))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_group_involution_is_conj_after_permutation(n):
    t = cyclic_group(n)
    a = semigroup_algebra(t)
    s = group_involution(t, a)
    perm = np.zeros((n, n))
    for k in range(n):
        perm[k, (-k) % n] = 1
    np.testing.assert_array_equal(s.S, perm)
    assert classify_star(a, s).kind == "both"


def test_selfadjoint_parts_examples():
    s = conj_transpose_star(2, M2)
    h = mat(M2, [[1, 2 - 1j], [2 + 1j, 0]])
    hh, kk = selfadjoint_parts(s, h)
    np.testing.assert_allclose(hh.coeffs, h.coeffs, atol=1e-15)
    np.testing.assert_allclose(kk.coeffs, 0, atol=1e-15)
    F = function_algebra(["a", "b"])
    hh, kk = selfadjoint_parts(conj_star(F), 1j * F.identity)
    np.testing.assert_allclose(hh.coeffs, 0, atol=1e-15)
    np.testing.assert_allclose(kk.coeffs, F.identity.coeffs, atol=1e-15)
    hh, kk = selfadjoint_parts(s, M2.basis(1))
    np.testing.assert_allclose(hh.coeffs, (M2.basis(1) + M2.basis(2)).coeffs / 2, atol=1e-15)
    np.testing.assert_allclose(kk.coeffs, (M2.basis(1) - M2.basis(2)).coeffs / 2j, atol=1e-15)
    assert is_self_adjoint(s, hh) and is_self_adjoint(s, kk)


def test_selfadjoint_parts_requires_involutive():
    with pytest.raises(NotInvolutive):
        selfadjoint_parts(StarStructure(M2, 2 * np.eye(4)), M2.identity)


def test_generated_subalgebra_examples():
    s = conj_transpose_star(2, M2)
    assert generated_star_subalgebra(M2, s, M2.identity).dim == 1
    sub = generated_star_subalgebra(M2, s, mat(M2, np.diag([2, 3])))
    assert sub.dim == 2 and sub.star_closed and sub.commutative
    # E12 is self-adjoint for entrywise conjugation, and E12^2 = 0
    b = entrywise_conj_binvolution(2, M2)
    sub = generated_star_subalgebra(M2, b, M2.basis(1))
    assert sub.dim == 2 and sub.star_closed and sub.commutative


def test_generated_subalgebra_not_star_closed():
    s = conj_transpose_star(2, M2)
    sub = generated_star_subalgebra(M2, s, M2.basis(1))
    # span{e, E12} does not contain E21
    assert sub.dim == 2 and not sub.star_closed and sub.commutative


def test_isometry_examples(rng):
    F = function_algebra(["a", "b", "c"])
    rep = check_star_isometry(F, conj_star(F), samples=50)
    assert rep.ok and rep.max_ratio_dev == 0
    rep = check_star_isometry(M2, conj_transpose_star(2, M2), samples=50)
    assert rep.ok
    x = mat(M2, unit_disk(rng, (2, 2)))
    sv = np.linalg.svd(coeffs_to_matrix(x.coeffs, 2), compute_uv=False)
    assert np.linalg.norm(left_regular_rep(M2, x), 2) == pytest.approx(sv[0])
    rep = check_star_isometry(M2, StarStructure(M2, 2 * np.eye(4)), samples=10)
    assert not rep.ok and rep.max_ratio_dev == pytest.approx(1.0)


def _stars():
    out = []
    for k in (1, 3):
        F = function_algebra([str(i) for i in range(k)])
        out.append((F, conj_star(F)))
    for n in (2, 3):
        M = matrix_algebra(n)
        out += [(M, conj_transpose_star(n, M)), (M, entrywise_conj_binvolution(n, M))]
        out.append((M, adjoint_from_form(n, HermitianForm(np.diag([1] * (n - 1) + [-1])), M)))
    for t in (cyclic_group(4), symmetric_group(3)):
        a = semigroup_algebra(t)
        out += [(a, group_involution(t, a)), (a, conj_star(a))]
    return out


STARS = _stars()


@pytest.mark.parametrize("a,s", STARS, ids=[f"{a.name}-{s.declared_kind}-{i}" for i, (a, s) in enumerate(STARS)])
def test_star_consequences(a, s, rng):
    kind = classify_star(a, s).kind
    assert kind != "neither"
    e = a.identity
    assert np.linalg.norm((apply_star(s, e) - e).coeffs) <= 1e-10
    for _ in range(10):
        x = a.element(unit_disk(rng, a.dim))
        xs = apply_star(s, x)
        assert hausdorff(spectrum(a, xs).points, np.conj(spectrum(a, x).as_array())) <= 1e-8
        lhs, rhs = apply_star(s, invert(a, x)), invert(a, xs)
        assert np.linalg.norm((lhs - rhs).coeffs) <= 1e-9 * np.linalg.norm(rhs.coeffs)
        h, k = selfadjoint_parts(s, x)
        assert np.linalg.norm((h + 1j * k - x).coeffs) <= 1e-12
        assert is_self_adjoint(s, h) and is_self_adjoint(s, k)
        # real combinations of self-adjoint elements stay self-adjoint
        assert is_self_adjoint(s, 0.7 * h - 2.5 * k)
        if kind in ("involution", "both"):
            assert is_self_adjoint(s, x * xs)
        for j in range(1, 7):
            assert is_self_adjoint(s, eval_element(Polynomial.monomial(j), a, h), tol=1e-9)
        # commuting self-adjoint elements: real polynomials in h
        h1 = eval_element(Polynomial([0.5, -1, 0.25]), a, h)
        h2 = eval_element(Polynomial([0, 2, 0, 1]), a, h)
        assert is_self_adjoint(s, h1 * h2, tol=1e-9)
