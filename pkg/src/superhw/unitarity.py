"""Unitarity classification of highest weights for su(p,q|n).

Predicates: dominance for the compact part, unitarity of the underlying
even-part module, interlocking of the odd chains, the integral unitarity
criterion, and the region classification (open region / boundary /
protected exterior).  Everything is exact rational arithmetic.
"""

from dataclasses import dataclass
from fractions import Fraction

from .atypicality import atypicality_degree
from .weights import (
    distinguished_pairings,
    is_integral,
    jakobsen_params,
)


@dataclass(frozen=True)
class UnitarityVerdict:
    g0Dominant: bool
    g0Unitary: bool
    oddInterlocking: bool
    gUnitaryIntegral: object  # bool or the string "not-applicable"
    region: str
    absolutelyProtected: bool
    pairings: tuple
    g1: Fraction
    g2: Fraction
    g3: Fraction
    partial: bool = False

    def to_json(self):
        gu = self.gUnitaryIntegral
        return {
            "g0_dominant": self.g0Dominant,
            "g0_unitary": self.g0Unitary,
            "odd_interlocking": self.oddInterlocking,
            "g_unitary_integral": gu if isinstance(gu, str) else bool(gu),
            "region": self.region,
            "absolutely_protected": self.absolutelyProtected,
            "pairings": [str(self.pairings[0]), str(self.pairings[1])],
            "g1": str(self.g1),
            "g2": str(self.g2),
            "g3": str(self.g3),
            "partial": self.partial,
        }


def _g_values(w):
    """g1 = lam^m + mu^n, g2 = lam^1 + mu^1, g3 = lam^1 - lam^m.

    All three are invariant under the shift direction.
    """
    g1 = w.lam[-1] + w.mu[-1]
    g2 = w.lam[0] + w.mu[0]
    g3 = w.lam[0] - w.lam[-1]
    return g1, g2, g3


def g0_dominance(w, datum):
    """Dominance for the even part: three descending chains with integral
    consecutive gaps (the bridge lam^m >= lam^1 may be any real)."""
    p, m = datum.p, datum.m
    for i in range(p - 1):
        d = w.lam[i] - w.lam[i + 1]
        if d < 0 or d.denominator != 1:
            return False
    for i in range(p, m - 1):
        d = w.lam[i] - w.lam[i + 1]
        if d < 0 or d.denominator != 1:
            return False
    if p >= 1 and p < m and w.lam[m - 1] < w.lam[0]:
        return False
    for k in range(datum.n - 1):
        d = w.mu[k] - w.mu[k + 1]
        if d < 0 or d.denominator != 1:
            return False
    return True


def g0_unitarity(w, datum):
    """Unitarizability of the underlying even-part highest-weight module.

    In the normal-form parameters the condition is that uplambda lies in the
    open half-line below the first reduction point or in the finite set of
    reduction points:
      uplambda < -m + max(i0, j0) + 1, or
      uplambda in {-m + max(i0,j0) + 1, ..., -m + i0 + j0} (integer steps
      from the threshold).
    """
    if not g0_dominance(w, datum):
        return False
    params = jakobsen_params(w, datum)
    m = datum.m
    threshold = Fraction(-m + max(params.i0, params.j0) + 1)
    top = Fraction(-m + params.i0 + params.j0)
    ul = params.uplambda
    if ul < threshold:
        return True
    offset = ul - threshold
    return offset.denominator == 1 and threshold + offset <= top


def odd_interlocking(w, datum):
    """lam^{p+1} >= ... >= lam^m >= -mu^n >= ... >= -mu^1 >= lam^1 >= ...
    >= lam^p (the two even chains interlocked through the negated mu chain).
    """
    p, m = datum.p, datum.m
    chain = list(w.lam[p:m]) + [-x for x in reversed(w.mu)] + list(w.lam[:p])
    return all(chain[i] >= chain[i + 1] for i in range(len(chain) - 1))


def g_unitarity_integral(w, datum):
    """The integral unitarity criterion.

    Requires (a) the interlocking chain and (b) one of
      (i)  g2 <= -len1 - q  and g1 >= len3,
      (ii) g2 <= -len1 - len2 and g1 = len3 = 0.
    Returns the string "not-applicable" for non-integral weights.
    """
    if not is_integral(w, datum):
        return "not-applicable"
    if not odd_interlocking(w, datum):
        return False
    params = jakobsen_params(w, datum)
    g1, g2, _ = _g_values(w)
    cond_i = g2 <= -params.len1 - datum.q and g1 >= params.len3
    cond_ii = g2 <= -params.len1 - params.len2 and g1 == 0 and params.len3 == 0
    return cond_i or cond_ii


def region_classify(w, datum):
    """Full classification of a highest weight.

    Regions: InteriorC (both strict sign conditions, typical),
    BoundaryCandidate (a vanishing boundary pairing on the unitary side),
    OutsideAtypical (unitary but past the boundary), NotUnitary,
    NonIntegralUndetermined (passes all necessary conditions but outside
    the implemented non-integral pieces).
    """
    if datum.p == 0 or datum.q == 0:
        raise ValueError("region classification requires p, q > 0")

    p1, p2 = distinguished_pairings(w, datum)
    g1, g2, g3 = _g_values(w)
    dom = g0_dominance(w, datum)
    g0uni = g0_unitarity(w, datum)
    interlock = odd_interlocking(w, datum)
    integral = is_integral(w, datum)
    gu = g_unitarity_integral(w, datum)
    protected = p1 > 0 and p2 < 0
    partial = False

    necessary = dom and g0uni and interlock
    if integral:
        unitary = bool(necessary and gu is True)
    else:
        # Partial criterion for non-integral weights: the necessary
        # conditions plus membership in the known boundary/interior pieces.
        unitary = necessary and (p2 == 0 or (p1 <= 0 and p2 > 0))
        partial = not integral

    if not unitary:
        if not integral and necessary:
            region = "NonIntegralUndetermined"
        else:
            region = "NotUnitary"
    elif p1 < 0 and p2 > 0:
        at = atypicality_degree(w, datum).degree
        if at != 0:
            raise AssertionError(
                "interior weight with nonzero atypicality degree"
            )
        region = "InteriorC"
    elif (p1 == 0 or p2 == 0) and p1 <= 0 and p2 >= 0:
        region = "BoundaryCandidate"
    else:
        region = "OutsideAtypical"

    return UnitarityVerdict(
        g0Dominant=dom,
        g0Unitary=g0uni,
        oddInterlocking=interlock,
        gUnitaryIntegral=gu,
        region=region,
        absolutelyProtected=protected,
        pairings=(p1, p2),
        g1=g1,
        g2=g2,
        g3=g3,
        partial=partial,
    )


def is_absolutely_protected(w, datum):
    """(w+rho, eps_p - delta_1) > 0 and (w+rho, eps_{p+1} - delta_n) < 0."""
    p1, p2 = distinguished_pairings(w, datum)
    return p1 > 0 and p2 < 0


def is_unitary(w, datum):
    """Convenience: the weight classifies into a unitary region."""
    return region_classify(w, datum).region in (
        "InteriorC",
        "BoundaryCandidate",
        "OutsideAtypical",
    )
