import pytest
from helpers import rng, twist_endo

from magnus.cobordism import compile_heegaard, mapping_cylinder_data
from magnus.errors import InvariantViolation
from magnus.freegroup import FreeEndo, PhiValuation, Word, jacobian
from magnus.functor import mag_kernel
from magnus.lagrangian import (as_graph_matrix, compose, graph, identity, make, tensor,
                               violations)
from magnus.linalg import Matrix, span
from magnus.samples import automorphism_library, random_heegaard, random_valuation
from magnus.surface import build


def _H(phi, g=1):
    return build(g, phi)


def test_identity_and_graph_of_identity():
    H = _H(PhiValuation([(1,), (0,)], 1))
    assert graph(Matrix.identity(2, 1), H, H) == identity(H)


def test_violation_names():
    H = _H(PhiValuation([(1,), (0,)], 1))
    small = span([[1, 0, 1, 0]], 4, 1)
    assert "not-half-dimensional" in violations(H, H, small)
    bad = span([[1, 0, 0, 0], [0, 1, 0, 0]], 4, 1)
    assert "not-isotropic" in violations(H, H, bad)
    with pytest.raises(InvariantViolation) as e:
        make(H, H, [[1, 0, 0, 0]])
    assert e.value.invariant == "not-half-dimensional"


def test_graph_rejects_non_unitary():
    H = _H(PhiValuation([(1,), (0,)], 1))
    with pytest.raises(InvariantViolation) as e:
        graph(Matrix([[2, 0], [0, 1]], 1), H, H)
    assert e.value.invariant in ("non-unitary", "point-not-preserved")
    with pytest.raises(InvariantViolation):
        graph(Matrix([[1, 1], [1, 1]], 1), H, H)


def test_graph_functoriality():
    r = rng(31)
    for g in (1, 2):
        lib = automorphism_library(g)
        for _ in range(5):
            f, h = r.choice(lib), r.choice(lib)
            phi = random_valuation(2 * g, 1, r)
            top = graph(jacobian(f, phi), build(g, phi.pullback(f)), build(g, phi))
            mid = phi.pullback(f)
            bottom = graph(jacobian(h, mid), build(g, mid.pullback(h)), build(g, mid))
            both = graph(jacobian(f.compose(h), phi), build(g, mid.pullback(h)), build(g, phi))
            assert compose(top, bottom) == both


def test_compose_with_identity():
    r = rng(32)
    for _ in range(5):
        rel = mag_kernel(compile_heegaard(random_heegaard(r, max_ghat=2)))
        assert compose(identity(rel.target), rel) == rel
        assert compose(rel, identity(rel.source)) == rel


def test_as_graph_matrix_recovers_jacobian():
    phi = PhiValuation([(0,), (1,)], 1)
    J = jacobian(twist_endo(), phi)
    rel = graph(J, build(1, phi.pullback(twist_endo())), build(1, phi))
    assert as_graph_matrix(rel) == J.to_frac()


def test_interchange_law():
    r = rng(33)
    for _ in range(4):
        fs = [r.choice(automorphism_library(1)) for _ in range(4)]
        phis = [random_valuation(2, 1, r) for _ in range(2)]
        rels = []
        for k in range(2):
            top_phi = phis[k]
            f_top, f_bot = fs[2 * k], fs[2 * k + 1]
            mid = top_phi.pullback(f_top)
            top = graph(jacobian(f_top, top_phi), build(1, mid), build(1, top_phi))
            bot = graph(jacobian(f_bot, mid), build(1, mid.pullback(f_bot)), build(1, mid))
            rels.append((top, bot))
        lhs = tensor(compose(rels[0][0], rels[0][1]), compose(rels[1][0], rels[1][1]))
        rhs = compose(tensor(rels[0][0], rels[1][0]), tensor(rels[0][1], rels[1][1]))
        assert lhs == rhs


def test_compose_rejects_mismatch():
    a = identity(_H(PhiValuation([(1,), (0,)], 1)))
    b = identity(_H(PhiValuation([(0,), (1,)], 1)))
    with pytest.raises(InvariantViolation):
        compose(a, b)


def test_mapping_cylinder_is_graph():
    f = FreeEndo([Word([1], 2), Word([2, 1], 2)], 2)
    phi = PhiValuation([(1,), (1,)], 1)
    rel = mag_kernel(compile_heegaard(mapping_cylinder_data(f, phi)))
    assert as_graph_matrix(rel) == jacobian(f, phi).to_frac()
