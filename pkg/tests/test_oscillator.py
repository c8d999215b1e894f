"""Exact oscillator matrix model: brackets, adjoints, kernels, indices."""

from fractions import Fraction

import pytest

from superhw.oscillator import (
    GR0,
    GR1,
    GaussianRational,
    TruncatedFock,
    adjoint,
    bps_report,
    bracket,
    build_generators,
    closed_form_norm,
    family_supercharge,
    formal_kernel,
    index_family,
    norm_series,
    operators_equal_interior,
    oscillator_indices,
    state_from_string,
)

N = 12


@pytest.fixture(scope="module")
def gens():
    return build_generators(N)


def zero_like(A):
    return A.plus(A, -1)


# ---------------------------------------------------------------------------
# Gaussian rationals


def test_gaussian_rational_arithmetic():
    a = GaussianRational(1, 2)
    b = GaussianRational(Fraction(1, 2), -1)
    assert a + b == GaussianRational(Fraction(3, 2), 1)
    assert a - b == GaussianRational(Fraction(1, 2), 3)
    assert a * b == GaussianRational(Fraction(5, 2), 0)
    assert (a / b) * b == a
    assert a.conj() == GaussianRational(1, -2)
    assert a.abs2() == 5
    assert -a == GaussianRational(-1, -2)
    assert 3 - a == GaussianRational(2, -2)
    assert bool(GaussianRational(0, 0)) is False
    assert hash(a) == hash(GaussianRational(1, 2))
    with pytest.raises(ZeroDivisionError):
        a / GaussianRational(0, 0)
    with pytest.raises(TypeError):
        GaussianRational.of(1.5j)


# ---------------------------------------------------------------------------
# truncated Fock space


def test_fock_bookkeeping():
    fock = TruncatedFock(5)
    assert fock.dim == 12
    for idx in range(fock.dim):
        a, b = fock.monomial(idx)
        assert fock.index(a, b) == idx
        assert fock.parity(idx) == (a + b) % 2
    assert fock.norm(fock.index(4, 1)) == 24
    with pytest.raises(ValueError):
        fock.index(6, 0)
    with pytest.raises(ValueError):
        fock.index(0, 2)


def test_weight_label_families():
    fock = TruncatedFock(5)
    # fermion-number 0 states sit at r = -1/2, fermion-number 1 at r = +1/2;
    # each x power lowers the conformal label by one
    for a in range(4):
        assert fock.weight_label(fock.index(a, 0)) == (
            -a - Fraction(1, 2),
            -Fraction(1, 2),
        )
        assert fock.weight_label(fock.index(a, 1)) == (
            -a - Fraction(1, 2),
            Fraction(1, 2),
        )


# ---------------------------------------------------------------------------
# the full bracket table on the interior block


EVEN_RELATIONS = [
    ("H", "E", {"E": 2}),
    ("H", "F", {"F": -2}),
    ("E", "F", {"H": 1}),
    ("J", "E", {}),
    ("J", "F", {}),
]

MIXED_RELATIONS = [
    ("H", "Q", {"Q": -1}),
    ("H", "Qbar", {"Qbar": -1}),
    ("H", "S", {"S": 1}),
    ("H", "Sbar", {"Sbar": 1}),
    ("J", "Q", {"Q": 1}),
    ("J", "Qbar", {"Qbar": -1}),
    ("J", "S", {"S": 1}),
    ("J", "Sbar", {"Sbar": -1}),
]

ODD_RELATIONS = [
    ("Q", "Q", {}),
    ("S", "S", {}),
    ("Qbar", "Qbar", {}),
    ("Sbar", "Sbar", {}),
    ("Q", "S", {}),
    ("Qbar", "Sbar", {}),
    ("Q", "Qbar", {"F": 2}),
    ("S", "Sbar", {"E": 2}),
    ("Q", "Sbar", {"H": -1, "J": -1}),
    ("S", "Qbar", {"H": 1, "J": -1}),
]


@pytest.mark.parametrize(
    "a,b,expected", EVEN_RELATIONS + MIXED_RELATIONS + ODD_RELATIONS
)
def test_bracket_table(gens, a, b, expected):
    fock = gens["fock"]
    lhs = bracket(gens[a], gens[b])
    rhs = zero_like(gens["H"])
    for name, coeff in expected.items():
        rhs = rhs.plus(gens[name].scaled(coeff))
    assert operators_equal_interior(lhs, rhs, fock)


def test_bracket_parity(gens):
    assert bracket(gens["Q"], gens["Qbar"]).parity == "even"
    assert bracket(gens["H"], gens["Q"]).parity == "odd"


# ---------------------------------------------------------------------------
# adjunctions


def test_adjunctions_interior(gens):
    fock = gens["fock"]
    assert operators_equal_interior(adjoint(gens["Q"]), gens["Sbar"], fock)
    assert operators_equal_interior(
        adjoint(gens["S"]), gens["Qbar"].scaled(-1), fock
    )
    assert operators_equal_interior(adjoint(gens["H"]), gens["H"], fock)


def test_product_adjoint_global(gens):
    # (AB)-adjoint = B-adjoint A-adjoint holds entrywise on the whole
    # truncation, not just the interior
    A, B = gens["Q"], gens["S"]
    lhs = adjoint(A.compose(B))
    rhs = adjoint(B).compose(adjoint(A))
    assert lhs.matrix == rhs.matrix


def test_h_eigenvalue_on_monomial(gens):
    fock = gens["fock"]
    v = state_from_string("x^2*eta", fock)
    out = gens["H"].apply(v)
    idx = fock.index(2, 1)
    assert out[idx] == GaussianRational(Fraction(-5, 2))
    assert all(not c for i, c in enumerate(out) if i != idx)


# ---------------------------------------------------------------------------
# the supercharge family


def test_family_endpoints(gens):
    assert family_supercharge(1, 0, N).matrix == gens["Q"].matrix
    assert (
        family_supercharge(0, 1, N).matrix
        == gens["S"].scaled(-1).matrix
    )
    with pytest.raises(ValueError):
        family_supercharge(0, 0, N)


def test_family_squares_to_zero(gens):
    Qrt = family_supercharge(2, 3, N)
    sq = Qrt.compose(Qrt)
    assert all(not e for row in sq.matrix for e in row)
    # the lowering endpoint annihilates the constants and the eta vacuum
    S0 = family_supercharge(0, 1, N)
    fock = gens["fock"]
    assert not any(S0.apply(state_from_string("1", fock)))
    assert not any(S0.apply(state_from_string("eta", fock)))


@pytest.mark.parametrize(
    "r,t",
    [
        (1, 2),
        (2, 1),
        (GaussianRational(1, 1), GaussianRational(0, 3)),
        (GaussianRational(0, 2), GaussianRational(1, -1)),
    ],
)
def test_xi_closed_form(gens, r, t):
    r = GaussianRational.of(r)
    t = GaussianRational.of(t)
    fock = gens["fock"]
    Qrt = family_supercharge(r, t, N)
    xi = bracket(Qrt, adjoint(Qrt))
    closed = (
        gens["H"].scaled(-(r.abs2() + t.abs2()))
        .plus(gens["J"].scaled(t.abs2() - r.abs2()))
        .plus(gens["F"].scaled(2 * (r * t.conj())))
        .plus(gens["E"].scaled(GaussianRational(-2) * r.conj() * t))
    )
    assert operators_equal_interior(xi, closed, fock)


def hermitian_psd(rows):
    """Exact PSD check by Cholesky-style elimination: a Hermitian matrix is
    PSD iff every pivot is non-negative and a zero diagonal forces a zero
    row."""
    mat = [list(r) for r in rows]
    n = len(mat)
    for k in range(n):
        d = mat[k][k]
        if d.im != 0 or d.re < 0:
            return False
        if d.re == 0:
            if any(mat[k][j] for j in range(k, n)):
                return False
            continue
        for i in range(k + 1, n):
            if mat[i][k]:
                f = mat[i][k] / d
                for j in range(k, n):
                    mat[i][j] = mat[i][j] - f * mat[k][j]
    return True


@pytest.mark.parametrize(
    "r,t", [(1, 2), (1, 3), (2, 3), (3, 2), (5, 1), (1, 1), (2, 5),
            (7, 4), (1, 6), (4, 7)]
)
def test_xi_positive_semidefinite_interior(gens, r, t):
    fock = gens["fock"]
    Qrt = family_supercharge(r, t, N)
    xi = bracket(Qrt, adjoint(Qrt))
    keep = [
        i for i in range(fock.dim) if fock.monomial(i)[0] <= fock.N - 2
    ]
    # Xi is self-adjoint in the weighted inner product, so the Gram-side
    # matrix G_ij = norm(i) * Xi_ij is Hermitian; Xi is PSD iff G is
    gram = [
        [
            GaussianRational.of(fock.norm(i)) * xi.matrix[i][j]
            for j in keep
        ]
        for i in keep
    ]
    assert hermitian_psd(gram)


# ---------------------------------------------------------------------------
# kernels and norms


def test_formal_kernel_dimension_and_gaussian(gens):
    basis = formal_kernel(1, 2, N)
    assert len(basis) == 2
    fock = gens["fock"]
    even = [
        v
        for v in basis
        if all(
            not c
            for i, c in enumerate(v)
            if fock.monomial(i)[1] == 1
        )
    ]
    assert len(even) == 1
    v = even[0]
    c0 = v[fock.index(0, 0)]
    assert c0
    # truncation of exp(-x^2/4): coefficient of x^{2k} is (-1/4)^k / k!
    for k in range(0, (N - 2) // 2 + 1):
        expect = GaussianRational(
            Fraction(-1, 4) ** k / __import__("math").factorial(k)
        )
        assert v[fock.index(2 * k, 0)] / c0 == expect
    for a in range(1, N - 2, 2):
        assert not v[fock.index(a, 0)]
    with pytest.raises(ValueError):
        formal_kernel(0, 1, N)


def test_norm_series_partial_sums():
    sums, rho, conv = norm_series(1, 2, 3)
    assert rho == Fraction(1, 4) and conv
    assert sums[0] == 1
    assert sums[1] == Fraction(9, 8)
    _, rho2, conv2 = norm_series(2, 1, 0)
    assert rho2 == 4 and not conv2
    with pytest.raises(ValueError):
        norm_series(1, 0, 2)


def test_norm_series_converges_to_closed_form():
    sums, rho, conv = norm_series(1, 2, 100)
    assert conv
    target = closed_form_norm(rho)
    assert abs(sums[-1] - target) < Fraction(1, 10**9)
    with pytest.raises(ValueError):
        closed_form_norm(Fraction(3, 2))


def test_index_family_values():
    assert index_family(1, 2) == (1, 0)
    assert index_family(1, 3) == (1, 0)
    assert index_family(2, 1) == (0, -1)
    assert index_family(3, 1) == (0, -1)
    assert index_family(1, 0) == (0, -1)
    assert index_family(0, 1) == (1, 0)
    assert index_family(
        GaussianRational(0, 1), GaussianRational(1, 1)
    ) == (1, 0)
    with pytest.raises(ValueError):
        index_family(1, 1)
    with pytest.raises(ValueError):
        index_family(GaussianRational(0, 1), GaussianRational(1, 0))


def test_oscillator_indices_golden():
    assert oscillator_indices(N) == (0, -1, 1, 0)


# ---------------------------------------------------------------------------
# BPS bookkeeping and parsing


def test_bps_report(gens):
    fock = gens["fock"]
    assert bps_report(state_from_string("eta", fock), N, gens) == (
        3,
        True,
        Fraction(1, 2),
    )
    assert bps_report(state_from_string("1", fock), N, gens) == (
        3,
        True,
        Fraction(1, 2),
    )
    assert bps_report(state_from_string("x^2", fock), N, gens) == (
        2,
        False,
        Fraction(0),
    )
    with pytest.raises(ValueError):
        bps_report([GR0] * fock.dim, N, gens)


def test_state_parsing(gens):
    fock = gens["fock"]
    v = state_from_string("x^2*eta", fock)
    assert v[fock.index(2, 1)] == GR1
    assert sum(1 for c in v if c) == 1
    assert state_from_string("1", fock)[fock.index(0, 0)] == GR1
    with pytest.raises(ValueError):
        state_from_string("y", fock)
    with pytest.raises(ValueError):
        state_from_string("eta*eta", fock)


def test_build_generators_validation():
    with pytest.raises(ValueError):
        build_generators(3)
