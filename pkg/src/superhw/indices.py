"""Witten indices, cancellation checks, formal dimensions, superdimensions.

The index of a supercharge on a highest-weight module is the supertrace over
the zero-eigenvalue slice of Xi = [Q, Q-adjoint], evaluated at a rational
fugacity point; a regulated full supertrace at two rational regulator values
cross-checks it within an exact truncation tail bound.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .rootdata import bilinear_form, depth_vector
from .weights import _frac
from .characters import (
    FormalCharacter,
    character_of,
    fragmentation,
    g0_decomposition_typical,
    kac_character,
    simple_boundary_character,
    _root_dvs,
    _series_mul,
    _geom_factor,
    _odd_factor,
    _zero_dv,
)


class NotDiscreteSeries(ValueError):
    """The strict negativity gate on the noncompact pairings fails."""


class LimitOfDiscreteSeries(ValueError):
    """A noncompact pairing is exactly zero: limit case, no formal dimension."""


@dataclass(frozen=True)
class FugacityPoint:
    """Values q_i = e^{-alpha_i(X)} per simple root, positive rationals.

    For evaluating a twisted index the point must lie on the twisted torus:
    q^{depth_vector(gamma)} = 1 for every twist root gamma (checked by the
    index computation, not here), and q^{dv} < 1 on the twisted positive
    roots.
    """

    q_values: tuple
    positivityChecked: bool = field(default=False)

    @classmethod
    def make(cls, values):
        vals = tuple(_frac(v) for v in values)
        ok = all(v > 0 for v in vals)
        return cls(vals, ok)

    @classmethod
    def from_json(cls, obj):
        return cls.make(obj["q_values"])

    def evaluate(self, dv):
        """q^dv = prod q_i^{dv_i}, exact."""
        out = Fraction(1)
        for q, d in zip(self.q_values, dv):
            out *= q**d
        return out


@dataclass(frozen=True)
class IndexValue:
    series: FormalCharacter
    evaluation: Fraction
    tail_bound: Fraction
    full_evaluations: tuple
    beta_agrees: bool
    exact: bool

    def to_json(self):
        return {
            "series": self.series.to_json(),
            "evaluation": str(self.evaluation),
            "tail_bound": str(self.tail_bound),
            "full_evaluations": [str(v) for v in self.full_evaluations],
            "beta_agrees": self.beta_agrees,
            "exact": self.exact,
        }


def xi_eigenvalue(lam, alpha, datum, sign=1):
    """Xi eigenvalue on the weight: sign * 2 * (lam, alpha)."""
    return 2 * sign * bilinear_form(lam, alpha, datum)


def xi_sign(char, alpha, datum):
    """The sign making all Xi eigenvalues on the character non-negative."""
    ok_plus = ok_minus = True
    for dv in char.terms:
        lam = char.weight_of_term(dv, datum)
        v = bilinear_form(lam, alpha, datum)
        if v > 0:
            ok_minus = False
        elif v < 0:
            ok_plus = False
    if ok_plus:
        return 1
    if ok_minus:
        return -1
    raise ValueError(
        "no consistent positivity sign for Xi on this module/supercharge"
    )


def _term_parity(dv, datum):
    """Parity offset of a term: total odd-root content of the drop mod 2,
    read off as the delta-coordinate sum of the dropped weight."""
    # Reconstruct the delta-block coordinate change of the drop:
    # drop = sum dv_i alpha_i; its delta-coordinate sum is -dv_{m-1}... the
    # simple roots are e_j - e_{j+1}, so the total delta content equals the
    # coefficient of the odd simple root (index m-1, 0-based) mod 2 only for
    # sl(m|1).  Compute directly instead.
    m, dim = datum.m, datum.dim
    delta_sum = 0
    for c, alpha in zip(dv, datum.simpleRoots):
        if c:
            delta_sum += c * sum(alpha.coords[m:])
    return (-delta_sum) % 2


def _plain_product_value(datum, X):
    """Exact closed form of the full plain product character at X:
    prod (1-q^a)^{-1} over even positives times prod (1+q^b) over odds."""
    value = Fraction(1)
    for dv in _root_dvs(datum.evenPositive, datum):
        value /= 1 - X.evaluate(dv)
    for dv in _root_dvs(datum.oddPositive, datum):
        value *= 1 + X.evaluate(dv)
    return value


def _plain_partial_sum(datum, X, depth):
    """Partial sum of the same product truncated to the given depth."""
    series = {_zero_dv(datum.dim): 1}
    for dv in _root_dvs(datum.evenPositive, datum):
        series = _series_mul(series, _geom_factor(dv, depth), depth)
    for dv in _root_dvs(datum.oddPositive, datum):
        series = _series_mul(series, _odd_factor(dv, depth), depth)
    return sum(
        (Fraction(c) * X.evaluate(dv) for dv, c in series.items()),
        Fraction(0),
    )


def _check_twisted_chamber(x, X, datum):
    """The fugacity point must kill the twist directions and be positive on
    the surviving (twisted) positive roots."""
    for gamma in x.roots:
        if X.evaluate(depth_vector(gamma, datum)) != 1:
            raise ValueError(
                "fugacity point is not on the twisted torus: "
                "q^depth(gamma) must equal 1 for every twist root"
            )
    twist_set = set(x.roots)
    for alpha in datum.evenPositive + datum.oddPositive:
        if alpha in twist_set:
            continue
        if all(
            bilinear_form(alpha, g, datum) == 0 for g in x.roots
        ):
            if X.evaluate(depth_vector(alpha, datum)) >= 1:
                raise ValueError(
                    "fugacity point is outside the positive chamber of "
                    "the twisted algebra"
                )


def witten_index(M, x, X, depth, datum, betas=(Fraction(1, 2), Fraction(1, 3))):
    """Witten index of the supercharge x on the module M.

    Two computations: (i) the supertrace of the zero-Xi slice of the
    character evaluated at X (exact); (ii) the regulated full supertrace at
    each t = e^{-beta} in betas, which must agree with (i) within the exact
    truncation tail bound.  The cross-check (ii) needs the plain product
    value to converge (q^dv < 1 on the even positive roots); when the
    chosen point violates that, (ii) is skipped and reported as such.
    """
    if not X.positivityChecked:
        raise ValueError("fugacity values must be positive rationals")
    if len(X.q_values) != datum.dim - 1:
        raise ValueError("need one fugacity value per simple root")
    _check_twisted_chamber(x, X, datum)
    char = character_of(M, datum, depth)
    module_parity = 0 if M.parity == "even" else 1
    signs = [xi_sign(char, alpha, datum) for alpha in x.roots]

    slice_terms = {}
    for dv, mult in char.terms.items():
        lam = char.weight_of_term(dv, datum)
        if all(
            bilinear_form(lam, alpha, datum) == 0 for alpha in x.roots
        ):
            slice_terms[dv] = mult
    series = FormalCharacter(char.base, slice_terms, depth, M.parity)

    evaluation = Fraction(0)
    for dv, mult in slice_terms.items():
        sgn = -1 if (module_parity + _term_parity(dv, datum)) % 2 else 1
        evaluation += sgn * mult * X.evaluate(dv)

    plain_converges = all(
        X.evaluate(dv) < 1
        for dv in _root_dvs(datum.evenPositive, datum)
    )
    if not plain_converges:
        return IndexValue(
            series=series,
            evaluation=evaluation,
            tail_bound=Fraction(0),
            full_evaluations=(),
            beta_agrees=None,
            exact=True,
        )
    v_full = _plain_product_value(datum, X)
    s_partial = _plain_partial_sum(datum, X, depth)
    tail = v_full - s_partial

    exact = True
    fulls = []
    agree = True
    for beta in betas:
        t = _frac(beta)
        if not Fraction(0) < t < Fraction(1):
            raise ValueError("regulator values must lie in (0,1)")
        total = Fraction(0)
        xi_min_pos = None
        for dv, mult in char.terms.items():
            lam = char.weight_of_term(dv, datum)
            xi = sum(
                (
                    xi_eigenvalue(lam, alpha, datum, s)
                    for alpha, s in zip(x.roots, signs)
                ),
                Fraction(0),
            )
            if xi > 0 and (xi_min_pos is None or xi < xi_min_pos):
                xi_min_pos = xi
            if xi.denominator == 1:
                tv = t ** int(xi)
            else:
                exact = False
                tv = Fraction(float(t) ** float(xi)).limit_denominator(
                    10**12
                )
            sgn = -1 if (module_parity + _term_parity(dv, datum)) % 2 else 1
            total += sgn * mult * tv * X.evaluate(dv)
        fulls.append(total)
        # Terms with positive Xi are suppressed by at least t^xi_min; the
        # truncated remainder is bounded by the plain tail.
        margin = tail
        if xi_min_pos is not None:
            tpow = (
                t ** int(xi_min_pos)
                if xi_min_pos.denominator == 1
                else Fraction(
                    float(t) ** float(xi_min_pos)
                ).limit_denominator(10**12)
            )
            margin += tpow * v_full
        if abs(total - evaluation) > margin:
            agree = False

    return IndexValue(
        series=series,
        evaluation=evaluation,
        tail_bound=tail,
        full_evaluations=tuple(fulls),
        beta_agrees=agree,
        exact=exact,
    )


def _slice_evaluation(lam0, char, x, X, datum, module_parity=0):
    """Zero-slice supertrace of an explicit character."""
    evaluation = Fraction(0)
    for dv, mult in char.terms.items():
        w = char.weight_of_term(dv, datum)
        if any(bilinear_form(w, alpha, datum) != 0 for alpha in x.roots):
            continue
        sgn = -1 if (module_parity + _term_parity(dv, datum)) % 2 else 1
        evaluation += sgn * mult * X.evaluate(dv)
    return evaluation


def kmmr_cancellation_check(lam0, x, X, depth, datum):
    """Additivity of the index across boundary fragmentation.

    Sums the zero-slice indices of the fragmentation factors of K(Lambda0)
    (each rebased to Lambda0) and compares with the index of K(Lambda0)
    itself.  Returns (holds, residual).
    """
    if not X.positivityChecked:
        raise ValueError("fugacity values must be positive rationals")
    kchar = kac_character(lam0, datum, depth)
    k_value = _slice_evaluation(lam0, kchar, x, X, datum)

    total = Fraction(0)
    for w, _par in fragmentation(lam0, datum):
        lchar = simple_boundary_character(w, datum, depth)
        rebased = lchar.rebase(lam0, datum).truncated(depth)
        # The rebased depth vectors already carry the odd-root offset of the
        # factor, so the term parity needs no extra module offset.
        total += _slice_evaluation(lam0, rebased, x, X, datum, 0)
    residual = k_value - total
    return residual == 0, residual


def formal_dimension(lam0, datum):
    """Harish-Chandra formal dimension from the root-pairing product.

    Requires dominance for the compact part and strict negativity of all
    noncompact rho0-shifted pairings (the discrete-series gate).
    """
    from .characters import _compact_dominant_integral

    if not _compact_dominant_integral(lam0, datum):
        raise ValueError("weight is not dominant for the compact part")
    rho0 = datum.rhoEven
    rhoc = datum.rhoCompact
    shifted0 = lam0.add_coords(rho0)
    shiftedc = lam0.add_coords(rhoc)

    for beta in datum.noncompactPositive:
        v = bilinear_form(shifted0, beta, datum)
        if v == 0:
            raise LimitOfDiscreteSeries(
                f"noncompact pairing vanishes on {beta.coords}"
            )
        if v > 0:
            raise NotDiscreteSeries(
                f"noncompact pairing {v} is positive on {beta.coords}"
            )

    d = Fraction(1)
    for alpha in datum.compactPositive:
        d *= bilinear_form(shiftedc, alpha, datum) / bilinear_form(
            rhoc, alpha, datum
        )
    for beta in datum.noncompactPositive:
        d *= abs(bilinear_form(shifted0, beta, datum)) / bilinear_form(
            rho0, beta, datum
        )
    if d <= 0:
        raise AssertionError("formal dimension must be positive")
    return d


def superdimension(lam, datum, decomposition=None):
    """Alternating sum of constituent formal dimensions.

    Without an explicit decomposition the weight must be typical (the full
    even-part constituent list is then determined).  Constituents failing
    the discrete-series gate are collected and reported together.
    """
    if decomposition is None:
        constituents, lower_bound = g0_decomposition_typical(lam, datum)
        if lower_bound:
            raise ValueError(
                "atypical weight: supply an explicit decomposition"
            )
    else:
        constituents = decomposition

    offenders = []
    total = Fraction(0)
    for w, par in constituents:
        try:
            d = formal_dimension(w, datum)
        except (NotDiscreteSeries, LimitOfDiscreteSeries, ValueError) as e:
            offenders.append((w, str(e)))
            continue
        total += (-1 if par % 2 else 1) * d
    if offenders:
        detail = "; ".join(f"{w!r}: {msg}" for w, msg in offenders)
        raise ValueError(f"constituents fail the dimension gate: {detail}")
    return total
