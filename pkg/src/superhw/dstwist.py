"""Supercharge descriptors and the combinatorial twist functor.

A supercharge is a set of signed, mutually orthogonal odd positive roots.
Twisting by it removes the matched (eps, delta) coordinate pairs and leaves
a smaller sl(m-k|n-k); on unitarizable simple modules the twist acts by
restricting the highest weight, dropping the atypicality by the rank.
"""

from dataclasses import dataclass

from .rootdata import Root, bilinear_form, build_root_datum_relaxed
from .weights import Weight, rho_pairing
from .atypicality import atypicality_degree


@dataclass(frozen=True)
class SuperchargeDescriptor:
    roots: tuple
    signs: tuple
    homological: bool = True

    def validate(self, datum):
        if not 1 <= len(self.roots) <= datum.defect:
            raise ValueError("need between 1 and defect roots")
        if len(self.signs) != len(self.roots):
            raise ValueError("one sign per root required")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")
        eps_seen, delta_seen = set(), set()
        for r in self.roots:
            if r.parity != "odd":
                raise ValueError("supercharge roots must be odd")
            if r not in datum.oddPositive:
                raise ValueError("root is not an odd positive root")
            i, k = _root_pair(r, datum)
            if i in eps_seen or k in delta_seen:
                raise ValueError("roots must have distinct eps/delta indices")
            eps_seen.add(i)
            delta_seen.add(k)
        for a in range(len(self.roots)):
            for b in range(a + 1, len(self.roots)):
                if bilinear_form(self.roots[a], self.roots[b], datum) != 0:
                    raise ValueError("supercharge roots must be orthogonal")
        return self

    @classmethod
    def from_json(cls, obj, datum):
        roots = []
        for i, k in obj["roots"]:
            coords = [0] * datum.dim
            coords[i - 1] = 1
            coords[datum.m + k - 1] = -1
            roots.append(Root(tuple(coords), "odd"))
        signs = tuple(obj.get("signs", [1] * len(roots)))
        homological = bool(obj.get("homological", True))
        return cls(tuple(roots), signs, homological).validate(datum)

    def to_json(self, datum):
        return {
            "roots": [list(_root_pair(r, datum)) for r in self.roots],
            "signs": list(self.signs),
            "homological": self.homological,
        }


@dataclass(frozen=True)
class TwistDatum:
    parent: object
    twistedDatum: object  # RootDatum of the twisted algebra, or None if empty
    keptEpsIndices: tuple  # 0-based parent indices surviving the twist
    keptDeltaIndices: tuple
    rank: int


@dataclass(frozen=True)
class DSResult:
    summands: tuple  # of (weight-or-coordinate-tuple, parity-offset)
    exact: bool


def _root_pair(root, datum):
    i = next(a for a in range(datum.m) if root.coords[a] == 1) + 1
    k = next(a for a in range(datum.n) if root.coords[datum.m + a] == -1) + 1
    return i, k


def rank(x):
    return len(x.roots)


def twist_root_datum(datum, x):
    """Root datum of the twisted algebra sl(m-k|n-k).

    The real-form split of the twist is p' = p - #{signs = +1},
    q' = q - #{signs = -1}.
    """
    x.validate(datum)
    k = rank(x)
    removed_eps = set()
    removed_delta = set()
    for r in x.roots:
        i, kk = _root_pair(r, datum)
        removed_eps.add(i - 1)
        removed_delta.add(kk - 1)
    kept_eps = tuple(i for i in range(datum.m) if i not in removed_eps)
    kept_delta = tuple(j for j in range(datum.n) if j not in removed_delta)
    plus = sum(1 for s in x.signs if s == 1)
    minus = k - plus
    p2, q2 = datum.p - plus, datum.q - minus
    if p2 < 0 or q2 < 0:
        raise ValueError("sign pattern incompatible with the (p,q) split")
    m2, n2 = datum.m - k, datum.n - k
    twisted = (
        build_root_datum_relaxed(p2, q2, n2) if m2 + n2 >= 1 else None
    )
    return TwistDatum(
        parent=datum,
        twistedDatum=twisted,
        keptEpsIndices=kept_eps,
        keptDeltaIndices=kept_delta,
        rank=k,
    )


def restrict_weight(w, t):
    """Drop the matched coordinate pairs.

    Returns a Weight when both blocks survive, otherwise the bare coordinate
    tuple of the surviving block.
    """
    lam = tuple(w.lam[i] for i in t.keptEpsIndices)
    mu = tuple(w.mu[j] for j in t.keptDeltaIndices)
    if lam and mu:
        return Weight(lam, mu)
    return lam + mu


def twisted_atypicality(wlike, twisted_datum):
    """Atypicality of a restricted weight in the twisted algebra."""
    if twisted_datum is None or not twisted_datum.oddPositive:
        return 0
    if not isinstance(wlike, Weight):
        return 0
    return atypicality_degree(wlike, twisted_datum).degree


def _restrict_root(root, t, datum, twisted):
    """Image of a surviving root under the index relabeling, or None."""
    eps_map = {old: new for new, old in enumerate(t.keptEpsIndices)}
    delta_map = {old: new for new, old in enumerate(t.keptDeltaIndices)}
    coords = [0] * twisted.dim
    for a, c in enumerate(root.coords):
        if c == 0:
            continue
        if a < datum.m:
            if a not in eps_map:
                return None
            coords[eps_map[a]] = c
        else:
            j = a - datum.m
            if j not in delta_map:
                return None
            coords[twisted.m + delta_map[j]] = c
    return Root(tuple(coords), root.parity)


def ds_simple(lam, x, datum):
    """Twist of a unitarizable simple module, at the level of weights.

    If the atypicality is below the rank the twist vanishes.  Otherwise the
    twist is computed root by root: a twist along the simple odd root
    eps_m - delta_1 gives exactly the restricted weight; along any other
    vanishing root the result is one of at most two candidates (restricted
    weight, restricted weight minus the induced boundary root), reported
    with exact=False.
    """
    x.validate(datum)
    k = rank(x)
    at = atypicality_degree(lam, datum).degree
    if at < k:
        return DSResult(summands=(), exact=True)

    current_datum = datum
    current = lam
    exact = True
    last_candidate = None
    remaining = list(zip(x.roots, x.signs))
    while remaining:
        root, sign = remaining.pop(0)
        if not isinstance(current, Weight):
            raise ValueError("cannot twist further: algebra exhausted")
        pr = rho_pairing(current, root, current_datum)
        if pr != 0:
            raise ValueError(
                f"twist root has nonzero pairing {pr}; "
                "not in the vanishing set of the weight"
            )
        step = SuperchargeDescriptor((root,), (sign,), x.homological)
        t = twist_root_datum(current_datum, step)
        twisted = t.twistedDatum
        i, kk = _root_pair(root, current_datum)
        is_simple_odd = i == current_datum.m and kk == 1
        current = restrict_weight(current, t)
        last_candidate = None
        if not is_simple_odd:
            exact = False
            gamma2 = _candidate_boundary_root(twisted)
            if gamma2 is not None and isinstance(current, Weight):
                last_candidate = current.sub_root(gamma2)
        # Re-express the remaining twist roots in the twisted algebra.
        new_remaining = []
        for r2, s2 in remaining:
            img = _restrict_root(r2, t, current_datum, twisted)
            if img is None:
                raise AssertionError(
                    "orthogonal twist roots must survive the restriction"
                )
            new_remaining.append((img, s2))
        remaining = new_remaining
        current_datum = twisted

    summands = [(current, 0)]
    if last_candidate is not None:
        summands.append((last_candidate, 1))
    return DSResult(summands=tuple(summands), exact=exact)


def _candidate_boundary_root(twisted):
    """The distinguished odd root eps_{p'} - delta'_1 of the twisted algebra,
    when it exists."""
    if twisted is None or twisted.p < 1 or twisted.n < 1:
        return None
    coords = [0] * twisted.dim
    coords[twisted.p - 1] = 1
    coords[twisted.m] = -1
    return Root(tuple(coords), "odd")
