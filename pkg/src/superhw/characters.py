"""Truncated formal characters over the weight lattice of sl(m|n).

A character is stored relative to its highest weight: exponents are "depth
vectors", the expansions of Lambda - lambda over the simple roots, and the
series is truncated by total depth.  All coefficients are exact integers.
"""

from .rootdata import depth_vector
from .weights import Weight, rho_pairing
from .atypicality import atypicality_degree, vanishing_odd_roots
from .unitarity import region_classify


# ---------------------------------------------------------------------------
# Series arithmetic on {depth_vector: int} dicts


def _zero_dv(dim):
    return (0,) * (dim - 1)


def _series_mul(a, b, limit):
    out = {}
    for da, ca in a.items():
        ta = sum(da)
        for db, cb in b.items():
            if ta + sum(db) > limit:
                continue
            key = tuple(x + y for x, y in zip(da, db))
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v != 0}


def _series_add(a, b, limit):
    out = {k: v for k, v in a.items() if sum(k) <= limit}
    for k, v in b.items():
        if sum(k) <= limit:
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v != 0}


def _geom_factor(dv, limit):
    """(1 - x^dv)^{-1} truncated: 1 + x^dv + x^{2 dv} + ..."""
    step = sum(dv)
    if step == 0:
        raise ValueError("geometric factor needs a positive-depth exponent")
    out = {}
    j = 0
    while j * step <= limit:
        out[tuple(j * c for c in dv)] = 1
        j += 1
    return out


def _odd_factor(dv, limit):
    """1 + x^dv."""
    out = {tuple(0 for _ in dv): 1}
    if sum(dv) <= limit:
        out[dv] = out.get(dv, 0) + 1
    return out


class FormalCharacter:
    """Truncated character: base weight plus {depth_vector: multiplicity}."""

    __slots__ = ("base", "terms", "depthLimit", "parity")

    def __init__(self, base, terms, depthLimit, parity="even"):
        self.base = base
        self.terms = {
            tuple(k): int(v)
            for k, v in terms.items()
            if v != 0 and sum(k) <= depthLimit
        }
        self.depthLimit = depthLimit
        self.parity = parity

    def __eq__(self, other):
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return (
            self.base == other.base
            and self.terms == other.terms
            and self.depthLimit == other.depthLimit
        )

    def __repr__(self):
        return (
            f"FormalCharacter(base={self.base!r}, "
            f"terms={len(self.terms)}, depth={self.depthLimit})"
        )

    def truncated(self, limit):
        return FormalCharacter(
            self.base,
            {k: v for k, v in self.terms.items() if sum(k) <= limit},
            min(limit, self.depthLimit),
            self.parity,
        )

    def rebase(self, new_base, datum):
        """Re-express relative to a higher base weight.

        new_base - base must lie in the non-negative root lattice.  The
        valid truncation depth grows by the total depth of the offset.
        """
        diff = tuple(
            a - b
            for a, b in zip(new_base.coords(), self.base.coords())
        )
        offset = depth_vector(diff, datum)
        shift = sum(offset)
        terms = {
            tuple(x + y for x, y in zip(offset, k)): v
            for k, v in self.terms.items()
        }
        return FormalCharacter(
            new_base, terms, self.depthLimit + shift, self.parity
        )

    def add(self, other, sign=1):
        if self.base != other.base:
            raise ValueError("base weight mismatch")
        limit = min(self.depthLimit, other.depthLimit)
        terms = _series_add(
            {k: v for k, v in self.terms.items()},
            {k: sign * v for k, v in other.terms.items()},
            limit,
        )
        return FormalCharacter(self.base, terms, limit, self.parity)

    def coefficient(self, dv):
        return self.terms.get(tuple(dv), 0)

    def weight_of_term(self, dv, datum):
        """The actual weight base - sum dv_i * alpha_i for a term."""
        w = self.base
        for c, alpha in zip(dv, datum.simpleRoots):
            if c:
                w = w.add_coords(alpha.coords, -c)
        return w

    def to_json(self):
        items = sorted(self.terms.items())
        return {
            "base": self.base.to_json(),
            "depth_limit": self.depthLimit,
            "terms": [
                {"depth_vector": list(k), "mult": v} for k, v in items
            ],
        }


# ---------------------------------------------------------------------------
# Character constructors


def _root_dvs(roots, datum):
    return [depth_vector(r, datum) for r in roots]


def verma_character(lam, datum, depth, parity="even"):
    """Full Verma character: product of even geometric and odd binomial
    factors over the positive system."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    series = {_zero_dv(datum.dim): 1}
    for dv in _root_dvs(datum.evenPositive, datum):
        series = _series_mul(series, _geom_factor(dv, depth), depth)
    for dv in _root_dvs(datum.oddPositive, datum):
        series = _series_mul(series, _odd_factor(dv, depth), depth)
    return FormalCharacter(lam, series, depth, parity)


def _compact_dominant_integral(lam, datum):
    """Blockwise weakly decreasing with integer gaps (eps split at p, mu)."""
    p, m = datum.p, datum.m
    blocks = [lam.lam[:p], lam.lam[p:m], lam.mu]
    for block in blocks:
        for i in range(len(block) - 1):
            d = block[i] - block[i + 1]
            if d < 0 or d.denominator != 1:
                return False
    return True


def _permutations(k):
    import itertools

    return list(itertools.permutations(range(k)))


def generalized_verma_character(lam0, datum, depth, parity="even"):
    """Character of the holomorphic-discrete-series-type module: the finite
    Weyl character of the compact factor times the noncompact geometric
    product.

    The compact Weyl group is the product of symmetric groups of the three
    coordinate blocks; the numerator is the alternating sum over it applied
    to lam0 + rho_c.
    """
    if not _compact_dominant_integral(lam0, datum):
        raise ValueError("weight is not dominant integral for the compact part")
    p, q, m, n = datum.p, datum.q, datum.m, datum.n
    v = [a + b for a, b in zip(lam0.coords(), datum.rhoCompact)]

    def signed_perms(block):
        k = len(block)
        out = []
        for perm in _permutations(k):
            inv = sum(
                1
                for i in range(k)
                for j in range(i + 1, k)
                if perm[i] > perm[j]
            )
            out.append((1 if inv % 2 == 0 else -1, perm))
        return out

    blocks = [(0, p), (p, m), (m, m + n)]
    numerator = {}
    for s1, p1 in signed_perms(v[0:p]):
        for s2, p2 in signed_perms(v[p:m]):
            for s3, p3 in signed_perms(v[m : m + n]):
                w = list(v)
                for dst, src in enumerate(p1):
                    w[0 + dst] = v[0 + src]
                for dst, src in enumerate(p2):
                    w[p + dst] = v[p + src]
                for dst, src in enumerate(p3):
                    w[m + dst] = v[m + src]
                drop = [a - b for a, b in zip(v, w)]
                try:
                    dv = depth_vector(drop, datum)
                except ValueError:
                    continue  # term beyond the dominant chamber drops out
                if sum(dv) > depth:
                    continue
                sgn = s1 * s2 * s3
                numerator[dv] = numerator.get(dv, 0) + sgn
    series = {k: v2 for k, v2 in numerator.items() if v2 != 0}
    for dv in _root_dvs(datum.compactPositive, datum):
        series = _series_mul(series, _geom_factor(dv, depth), depth)
    for dv in _root_dvs(datum.noncompactPositive, datum):
        series = _series_mul(series, _geom_factor(dv, depth), depth)
    char = FormalCharacter(lam0, series, depth, parity)
    if char.coefficient(_zero_dv(datum.dim)) != 1:
        raise AssertionError("leading coefficient of a character must be 1")
    return char


def kac_character(lam, datum, depth, L0char=None, parity="even"):
    """ch K(Lambda): the even-part character times the odd binomial product."""
    if L0char is None:
        L0char = generalized_verma_character(lam, datum, depth, parity)
    if L0char.base != lam:
        raise ValueError("base weight mismatch between Lambda and L0char")
    series = {k: v for k, v in L0char.terms.items()}
    for dv in _root_dvs(datum.oddPositive, datum):
        series = _series_mul(series, _odd_factor(dv, depth), depth)
    return FormalCharacter(lam, series, min(depth, L0char.depthLimit), parity)


def g0_decomposition_typical(lam, datum):
    """Even-part constituents of K(Lambda) as (weight, parity-offset) pairs.

    For typical Lambda the constituents are Lambda - sum(S) over all subsets
    S of the odd positive roots, with parity offset |S| mod 2.  For atypical
    Lambda only the subsets avoiding the vanishing roots are guaranteed; the
    second return value flags that the list is a lower bound.
    """
    import itertools

    vanishing = set(vanishing_odd_roots(lam, datum))
    lower_bound_only = bool(vanishing)
    pool = [r for r in datum.oddPositive if r not in vanishing]
    out = []
    for size in range(len(pool) + 1):
        for sub in itertools.combinations(pool, size):
            w = lam
            for r in sub:
                w = w.sub_root(r)
            out.append((w, size % 2))
    return out, lower_bound_only


def _vanishing_boundary_roots(lam0, datum):
    """(gamma1_vanishes, gamma2_vanishes, gamma1, gamma2) for the two
    distinguished odd roots eps_p - delta_1 and eps_{p+1} - delta_n."""
    p, m, n = datum.p, datum.m, datum.n
    gamma1 = next(
        r
        for r in datum.oddPositive
        if r.coords[p - 1] == 1 and r.coords[m] == -1
    )
    gamma2 = next(
        r
        for r in datum.oddPositive
        if r.coords[p] == 1 and r.coords[m + n - 1] == -1
    )
    v1 = rho_pairing(lam0, gamma1, datum) == 0
    v2 = rho_pairing(lam0, gamma2, datum) == 0
    return v1, v2, gamma1, gamma2


def fragmentation(lam0, datum):
    """Jordan-Hoelder factors of the Kac module at a boundary weight.

    Returns a list of (weight, parity-offset) pairs; the parity offset is
    the number of odd-root subtractions mod 2.
    """
    verdict = region_classify(lam0, datum)
    if verdict.region != "BoundaryCandidate":
        raise ValueError(
            f"fragmentation requires a boundary weight, got {verdict.region}"
        )
    v1, v2, gamma1, gamma2 = _vanishing_boundary_roots(lam0, datum)
    if v1 and v2:
        if datum.n > 1:
            return [
                (lam0, 0),
                (lam0.sub_root(gamma1), 1),
                (lam0.sub_root(gamma2), 1),
                (lam0.sub_root(gamma1).sub_root(gamma2), 0),
            ]
        # n = 1: the double subtraction does not occur; three factors.
        return [
            (lam0, 0),
            (lam0.sub_root(gamma2), 1),
            (lam0.sub_root(gamma1), 1),
        ]
    if v1:
        return [(lam0, 0), (lam0.sub_root(gamma1), 1)]
    if v2:
        return [(lam0, 0), (lam0.sub_root(gamma2), 1)]
    raise AssertionError("boundary weight with no vanishing boundary pairing")


def _is_trivial_mod_shift(lam, datum):
    return lam == Weight((0,) * datum.m, (0,) * datum.n)


def simple_boundary_character(lam0, datum, depth, parity="even"):
    """ch L(Lambda0) for a weight with a vanishing boundary pairing.

    Computed by telescoping: the alternating sum of Kac characters along the
    vanishing isotropic direction gamma, which divides out the single factor
    (1 + e^{-gamma}).  The chain is checked to stay in the one-vanishing-root
    case; the corner (both pairings zero) telescopes along the second
    direction, and a weight equivalent to zero yields the trivial character.
    """
    if _is_trivial_mod_shift(lam0, datum):
        return FormalCharacter(
            lam0, {_zero_dv(datum.dim): 1}, depth, parity
        )
    v1, v2, gamma1, gamma2 = _vanishing_boundary_roots(lam0, datum)
    if not (v1 or v2):
        raise ValueError("weight has no vanishing boundary pairing")
    gamma = gamma2 if v2 else gamma1
    gdv = depth_vector(gamma, datum)
    gstep = sum(gdv)

    series = {}
    j = 0
    current = lam0
    while j * gstep <= depth:
        if j >= 1:
            others = [
                r
                for r in vanishing_odd_roots(current, datum)
                if r != gamma
            ]
            # For n = 1 the chain may pass through the corner; that case is
            # covered by the validated closed form.  Anything else is an
            # undetermined degeneration and is reported, not guessed.
            boundary = {gamma1, gamma2}
            bad = [r for r in others if r not in boundary] if datum.n == 1 else others
            if bad:
                raise ValueError(
                    "telescoping chain hits an additional vanishing odd "
                    f"pairing at step {j}; character not determined"
                )
        sub = kac_character(current, datum, depth - j * gstep)
        offset = tuple(j * c for c in gdv)
        sign = 1 if j % 2 == 0 else -1
        for k, v in sub.terms.items():
            key = tuple(a + b for a, b in zip(offset, k))
            series[key] = series.get(key, 0) + sign * v
        j += 1
        current = current.sub_root(gamma)

    char = FormalCharacter(lam0, series, depth, parity)
    if any(v < 0 for v in char.terms.values()):
        raise AssertionError("negative multiplicity in a simple character")
    return char


def character_of(descriptor, datum, depth):
    """Dispatch on a SupermoduleDescriptor-style (kind, weight, parity)."""
    kind = descriptor.kind
    lam = descriptor.highestWeight
    parity = descriptor.parity
    if kind == "Verma":
        return verma_character(lam, datum, depth, parity)
    if kind == "Kac":
        return kac_character(lam, datum, depth, parity=parity)
    if kind == "GeneralizedVerma":
        return generalized_verma_character(lam, datum, depth, parity)
    if kind == "SimpleTyp":
        if atypicality_degree(lam, datum).degree != 0:
            raise ValueError("SimpleTyp requires a typical highest weight")
        return kac_character(lam, datum, depth, parity=parity)
    if kind in ("SimpleBoundary", "Oscillator"):
        return simple_boundary_character(lam, datum, depth, parity)
    raise ValueError(f"unknown module kind {kind!r}")


class SupermoduleDescriptor:
    """A named highest-weight module: kind, highest weight, parity."""

    KINDS = (
        "Verma",
        "Kac",
        "GeneralizedVerma",
        "SimpleTyp",
        "SimpleBoundary",
        "Oscillator",
    )

    __slots__ = ("kind", "highestWeight", "parity")

    def __init__(self, kind, highestWeight, parity="even"):
        if kind not in self.KINDS:
            raise ValueError(f"unknown module kind {kind!r}")
        if parity not in ("even", "odd"):
            raise ValueError("parity must be 'even' or 'odd'")
        self.kind = kind
        self.highestWeight = highestWeight
        self.parity = parity
