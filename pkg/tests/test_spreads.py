import pytest

from towerspread import (ConstructionError, DomainError, ParameterError,
                         Spread, SpreadParams, base_subspace, coord_frame,
                         default_chain, desarguesian_spread, form_context,
                         gammas, intersect, is_totally_isotropic,
                         is_totally_singular, kernel_space, orbit_spread,
                         quad_form, restrict_singular, restrict_spread,
                         scale_subspace, span, verify_spread, zeta_element)


def spread_rows(S):
    return {X.rows for X in S.members}


# ---------------------------------------------------------------------------
# Chains

def test_default_chain_values():
    assert default_chain(9) == (9, 3, 1)
    assert default_chain(15) == (15, 5, 1)
    assert default_chain(7) == (7, 1)
    assert default_chain(45) == (45, 15, 5, 1)
    assert default_chain(105) == (105, 35, 7, 1)


def test_default_chain_errors():
    with pytest.raises(ParameterError):
        default_chain(6)
    with pytest.raises(ParameterError):
        default_chain(1)


# ---------------------------------------------------------------------------
# Trace kernels

def test_kernel_space_dims(tower13, tower19):
    assert kernel_space(tower13, 0).dim == 2
    assert kernel_space(tower19, 0).dim == 6
    assert kernel_space(tower19, 1).dim == 2


def test_kernel_space_matches_scan(tower19):
    ctx = tower19.ctx
    for i in range(tower19.n):
        d_i = tower19.subfield_deg(i)
        d_next = tower19.subfield_deg(i + 1)
        want = {x for x in ctx.subfield_elements(d_i)
                if ctx.rel_trace(x, d_i, d_next) == 0}
        W = kernel_space(tower19, i)
        assert set(W.vectors()) == want


def test_kernel_space_index_errors(tower19):
    with pytest.raises(ParameterError):
        kernel_space(tower19, 2)
    with pytest.raises(ParameterError):
        kernel_space(tower19, -1)


# ---------------------------------------------------------------------------
# Parameters and gammas

def test_params_arity(tower19):
    SpreadParams(tower19, (1,), "elliptic")
    SpreadParams(tower19, (1, 1), "symplectic")
    with pytest.raises(ParameterError):
        SpreadParams(tower19, (), "elliptic")
    with pytest.raises(ParameterError):
        SpreadParams(tower19, (1,), "symplectic")
    with pytest.raises(ParameterError):
        SpreadParams(tower19, (1, 1), "elliptic")
    with pytest.raises(ParameterError):
        SpreadParams(tower19, (1,), "orthogonal")


def test_params_reject_trivial_zeta(tower19):
    with pytest.raises(ParameterError):
        SpreadParams(tower19, (9,), "elliptic")  # 9 = subgroup order -> zeta = 1
    with pytest.raises(ParameterError):
        SpreadParams(tower19, (0,), "elliptic")
    with pytest.raises(ParameterError):
        SpreadParams(tower19, (1, 3), "symplectic")  # zeta_2 subgroup has order 3
    SpreadParams(tower19, (10,), "elliptic")  # 10 = 1 mod 9: same zeta, allowed


def test_theorem_flag(tower13, tower19):
    assert not SpreadParams(tower13, (), "elliptic").theorem_ok  # q^m = 8
    assert SpreadParams(tower19, (1,), "elliptic").theorem_ok    # q^m = 512


def test_gammas_empty_product(tower13):
    assert gammas(SpreadParams(tower13, (), "elliptic")) == [1]


def test_gammas_norm_one(tower19):
    ctx = tower19.ctx
    for k in (1, 4, 7):
        params = SpreadParams(tower19, (k, 1), "symplectic")
        for gam in gammas(params):
            assert ctx.mul(gam, ctx.conjugate(gam)) == 1


def test_gamma_exponent_arithmetic(tower19):
    # gamma_1 = zeta_1 = theta_0^(k * (q^m+1)/(q^{m_1}+1)) = theta_0^57 at k = 1
    ctx = tower19.ctx
    params = SpreadParams(tower19, (1,), "elliptic")
    assert gammas(params)[1] == ctx.pow(ctx.circle_generator(), 57)
    assert gammas(params)[1] == zeta_element(tower19, 1, 1)


# ---------------------------------------------------------------------------
# Base subspaces

def test_base_single_step_is_trace_kernel(tower13):
    params = SpreadParams(tower13, (), "elliptic")
    assert base_subspace(params) == kernel_space(tower13, 0)


def test_base_elliptic_e1m9_all_k(tower19, fc19):
    for k in range(1, 9):
        base = base_subspace(SpreadParams(tower19, (k,), "elliptic"))
        assert base.dim == 8
        assert is_totally_singular(fc19, base)


def test_base_summands_are_singular(tower19, fc19):
    # every basis vector of each gamma-scaled kernel is singular
    params = SpreadParams(tower19, (3,), "elliptic")
    gam = gammas(params)
    for i in range(tower19.n):
        part = scale_subspace(kernel_space(tower19, i), gam[i]) if gam[i] != 1 \
            else kernel_space(tower19, i)
        for b in part.basis:
            assert quad_form(fc19, b) == 0


def test_symplectic_base_e1m3(tower13, fc13):
    W = kernel_space(tower13, 0)
    for k in (1, 2, 4, 5, 7, 8):
        base = base_subspace(SpreadParams(tower13, (k,), "symplectic"))
        assert base.dim == 3
        assert is_totally_isotropic(fc13, base)
        singular = {v for v in base.vectors() if quad_form(fc13, v) == 0}
        assert singular == set(W.vectors())


def test_symplectic_base_restricts_to_elliptic_base(tower19, fc19):
    for k1, k2 in ((1, 1), (1, 2), (5, 1)):
        sym = base_subspace(SpreadParams(tower19, (k1, k2), "symplectic"))
        ell = base_subspace(SpreadParams(tower19, (k1,), "elliptic"))
        singular = {v for v in sym.vectors() if quad_form(fc19, v) == 0}
        assert singular == set(ell.vectors())
        assert restrict_singular(fc19, sym) == ell


# ---------------------------------------------------------------------------
# Orbit spreads

def test_orbit_spread_e1m3_elliptic(tower13, fc13):
    S = orbit_spread(SpreadParams(tower13, (), "elliptic"))
    assert len(S.members) == 9
    assert all(X.dim == 2 for X in S.members)
    ctx = tower13.ctx
    W = kernel_space(tower13, 0)
    t0 = ctx.circle_generator()
    expect = {scale_subspace(W, ctx.pow(t0, t)).rows for t in range(9)}
    assert spread_rows(S) == expect


def test_orbit_spread_members_sorted_canonically(tower13):
    S = orbit_spread(SpreadParams(tower13, (), "elliptic"))
    keys = [X.sort_key for X in S.members]
    assert keys == sorted(keys)


def test_orbit_spread_symplectic_e1m3_partitions(tower13):
    S = orbit_spread(SpreadParams(tower13, (1,), "symplectic"))
    assert len(S.members) == 9
    assert all(X.dim == 3 for X in S.members)
    union = set()
    for X in S.members:
        union |= set(X.vectors()) - {0}
    assert len(union) == 9 * 7 == 63


def test_desarguesian_e1m3(ctx13, fc13):
    S = desarguesian_spread(ctx13)
    assert S.kind == "symplectic" and S.provenance == "desarguesian"
    assert len(S.members) == 9
    assert all(X.dim == 3 for X in S.members)
    assert all(is_totally_isotropic(fc13, X) for X in S.members)
    # the member through 1 is the middle subfield itself
    containing = [X for X in S.members if X.member(1)]
    assert len(containing) == 1
    F = span(coord_frame(ctx13), list(ctx13.subfield_elements(3)))
    assert containing[0] == F
    covered = sum(X.size() - 1 for X in S.members)
    assert covered == (1 << ctx13.D) - 1


# ---------------------------------------------------------------------------
# Restriction

def test_restrict_middle_subfield_gives_trace_kernel(fc13, tower13):
    ctx = fc13.frame.ctx
    F = span(fc13.frame, list(ctx.subfield_elements(3)))
    # oracle: the singular elements of F, found by scanning F
    singular = {x for x in F.vectors() if quad_form(fc13, x) == 0}
    W = kernel_space(tower13, 0)
    assert singular == set(W.vectors())
    assert restrict_singular(fc13, F) == W


def test_restrict_commutes_with_circle(fc13, tower13):
    ctx = fc13.frame.ctx
    F = span(fc13.frame, list(ctx.subfield_elements(3)))
    W = kernel_space(tower13, 0)
    t0 = ctx.circle_generator()
    for t in range(9):
        theta = ctx.pow(t0, t)
        assert (restrict_singular(fc13, scale_subspace(F, theta))
                == scale_subspace(W, theta))


def test_restrict_singular_rejects_bad_input(fc13):
    ctx = fc13.frame.ctx
    W2 = span(fc13.frame, [ctx.g])  # wrong dimension
    with pytest.raises(DomainError):
        restrict_singular(fc13, W2)
    # find a non-isotropic 3-space deterministically
    for j in range(2, 1 << ctx.D):
        X = span(fc13.frame, [1, ctx.g, j])
        if X.dim == 3 and not is_totally_isotropic(fc13, X):
            with pytest.raises(DomainError):
                restrict_singular(fc13, X)
            break
    else:
        pytest.fail("no non-isotropic 3-space found")


def test_restrict_spread_desarguesian(ctx13, fc13, tower13):
    S = desarguesian_spread(ctx13)
    verify_spread(fc13, S)
    R = restrict_spread(fc13, S)
    assert R.kind == "elliptic" and R.provenance == "restriction"
    assert len(R.members) == 9
    E = orbit_spread(SpreadParams(tower13, (), "elliptic"))
    assert spread_rows(R) == spread_rows(E)


def test_restrict_requires_verified_symplectic(ctx13, fc13, tower13):
    S = desarguesian_spread(ctx13)
    with pytest.raises(ParameterError):
        restrict_spread(fc13, S)  # not verified yet
    E = orbit_spread(SpreadParams(tower13, (), "elliptic"))
    verify_spread(fc13, E)
    with pytest.raises(ParameterError):
        restrict_spread(fc13, E)  # wrong kind


def test_restrict_drops_final_zeta_parameter(tower19, fc19):
    S = orbit_spread(SpreadParams(tower19, (2, 1), "symplectic"))
    verify_spread(fc19, S)
    R = restrict_spread(fc19, S)
    assert R.params is not None
    assert R.params.kind == "elliptic"
    assert R.params.zeta_exponents == (2,)
