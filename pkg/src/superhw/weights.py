"""Exact weight arithmetic for sl(m|n) highest weights.

A weight is a rational coordinate tuple (lam^1..lam^m | mu^1..mu^n) taken
modulo the shift vector (1,...,1|-1,...,-1), which pairs to zero with every
root.  All arithmetic is done with fractions.Fraction; no floats.
"""

from dataclasses import dataclass
from fractions import Fraction

from .rootdata import bilinear_form, shift_vector


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


class Weight:
    """A weight of sl(m|n), compared modulo the shift direction."""

    __slots__ = ("lam", "mu")

    def __init__(self, lam, mu):
        self.lam = tuple(_frac(x) for x in lam)
        self.mu = tuple(_frac(x) for x in mu)
        if not self.lam or not self.mu:
            raise ValueError("both blocks must be non-empty")

    @property
    def m(self):
        return len(self.lam)

    @property
    def n(self):
        return len(self.mu)

    def coords(self):
        return self.lam + self.mu

    def _canonical_key(self):
        # Normalize the shift freedom by forcing the last mu entry to zero:
        # w - mu^n * shift has mu^n = 0 (shift has -1 in the mu block).
        t = -self.mu[-1]
        lam = tuple(x - t for x in self.lam)
        mu = tuple(x + t for x in self.mu)
        return lam + mu

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        if self.m != other.m or self.n != other.n:
            return False
        return self._canonical_key() == other._canonical_key()

    def __hash__(self):
        return hash(self._canonical_key())

    def __repr__(self):
        ls = ",".join(str(x) for x in self.lam)
        ms = ",".join(str(x) for x in self.mu)
        return f"Weight({ls}|{ms})"

    def shifted(self, t):
        """The equivalent representative w + t*(1,...,1|-1,...,-1)."""
        t = _frac(t)
        return Weight(
            tuple(x + t for x in self.lam), tuple(x - t for x in self.mu)
        )

    def add_coords(self, v, scale=1):
        """New weight with scale*v added coordinate-wise (v of length m+n)."""
        s = _frac(scale)
        cv = tuple(v.coords() if isinstance(v, Weight) else v)
        if len(cv) != self.m + self.n:
            raise ValueError("dimension mismatch")
        lam = tuple(x + s * _frac(c) for x, c in zip(self.lam, cv[: self.m]))
        mu = tuple(
            x + s * _frac(c) for x, c in zip(self.mu, cv[self.m :])
        )
        return Weight(lam, mu)

    def sub_root(self, root):
        """The weight lowered by the given root."""
        return self.add_coords(root.coords, -1)

    def to_json(self):
        return {
            "lambda": [str(x) for x in self.lam],
            "mu": [str(x) for x in self.mu],
        }

    @classmethod
    def from_json(cls, obj):
        return cls(obj["lambda"], obj["mu"])

    @classmethod
    def parse(cls, text):
        """Parse the compact CLI form "a,b|c"."""
        if "|" not in text:
            raise ValueError("weight must have the form 'lam...|mu...'")
        left, right = text.split("|", 1)
        lam = [p.strip() for p in left.split(",") if p.strip() != ""]
        mu = [p.strip() for p in right.split(",") if p.strip() != ""]
        if not lam or not mu:
            raise ValueError("both weight blocks must be non-empty")
        return cls(lam, mu)

    def compact(self):
        return (
            ",".join(str(x) for x in self.lam)
            + "|"
            + ",".join(str(x) for x in self.mu)
        )


@dataclass(frozen=True)
class JakobsenParams:
    """Normal-form parameters (a, b, uplambda, upalpha) with Young lengths."""

    a: tuple
    b: tuple
    uplambda: Fraction
    upalpha: Fraction
    i0: int
    j0: int
    len1: int
    len2: int
    len3: int


def canonicalize(w):
    """Shift representative with lam^1 + lam^m = 2*mu^n; idempotent."""
    t = (2 * w.mu[-1] - w.lam[0] - w.lam[-1]) / 4
    return w.shifted(t)


def jakobsen_params(w, datum):
    """Extract the normal-form parameters of a weight.

    In the canonical representative: uplambda = lam^1 - lam^m, upalpha =
    lam^1 + lam^m; a_i = lam^i minus the block baseline (lam^1 for the first
    p entries, lam^m for the rest), b_k = mu^k - mu^n.  i0 is the largest
    index in 1..p with a_i = 0 (a_1 = 0 always); j0 is the smallest j in
    1..q-1 with a_{m-j} != 0, and q if all of a_{p+1}..a_{m-1} vanish.
    """
    c = canonicalize(w)
    m, n, p, q = datum.m, datum.n, datum.p, datum.q
    uplambda = c.lam[0] - c.lam[-1]
    upalpha = c.lam[0] + c.lam[-1]
    a = []
    for i in range(1, m - 1):
        base = c.lam[0] if i < p else c.lam[-1]
        a.append(c.lam[i] - base)
    b = tuple(c.mu[k] - c.mu[-1] for k in range(n - 1))
    a = tuple(a)

    # a is indexed a_2..a_{m-1}; a[i-2] is a_i.
    len1 = sum(1 for i in range(2, p + 1) if a[i - 2] != 0)
    len2 = sum(1 for i in range(p + 1, m) if a[i - 2] != 0)
    len3 = sum(1 for x in b if x != 0)

    i0 = 1  # a_1 = 0 by convention
    for i in range(p, 1, -1):
        if a[i - 2] == 0:
            i0 = i
            break

    j0 = q
    for j in range(1, q):
        if a[(m - j) - 2] != 0:
            j0 = j
            break

    return JakobsenParams(
        a=a,
        b=b,
        uplambda=uplambda,
        upalpha=upalpha,
        i0=i0,
        j0=j0,
        len1=len1,
        len2=len2,
        len3=len3,
    )


def reconstruct(params, datum):
    """Inverse of jakobsen_params: rebuild the canonical weight."""
    m, n, p = datum.m, datum.n, datum.p
    top = (params.uplambda + params.upalpha) / 2
    bot = (params.upalpha - params.uplambda) / 2
    lam = [top]
    for i in range(1, m - 1):
        base = top if i < p else bot
        lam.append(base + params.a[i - 1 - 1])
    lam.append(bot)
    mu = [params.upalpha / 2 + bk for bk in params.b] + [params.upalpha / 2]
    return Weight(lam, mu)


def delta_r(w, datum):
    """Conformal dimension and R-charge of a weight.

    Delta pairs with H = (2/m) diag(q*1_p, -p*1_q | 0); r pairs with
    J = diag(n*1_m | m*1_n)/(n-m) for m != n, and is the plain coordinate
    sum for m = n (where the usual J is replaced by the identity matrix).
    Both are invariant under the shift.
    """
    m, n, p, q = datum.m, datum.n, datum.p, datum.q
    if p == 0 or q == 0:
        raise ValueError("Delta requires p, q > 0")
    delta = Fraction(2, m) * (
        q * sum(w.lam[:p], Fraction(0)) - p * sum(w.lam[p:], Fraction(0))
    )
    if m != n:
        r = (
            n * sum(w.lam, Fraction(0)) + m * sum(w.mu, Fraction(0))
        ) / Fraction(n - m)
    else:
        r = sum(w.lam, Fraction(0)) + sum(w.mu, Fraction(0))
    return delta, r


def rho_pairing(w, alpha, datum):
    """(w + rho, alpha) with rho the stored integer representative."""
    shifted = w.add_coords(datum.rho)
    return bilinear_form(shifted, alpha, datum)


def distinguished_pairings(w, datum):
    """The two boundary pairings P1 = (w+rho, eps_p - delta_1) and
    P2 = (w+rho, eps_{p+1} - delta_n)."""
    m, n, p = datum.m, datum.n, datum.p
    if p == 0 or datum.q == 0:
        raise ValueError("distinguished pairings require p, q > 0")
    p1 = w.lam[p - 1] + (m + 1 - p) + w.mu[0] - 1
    p2 = w.lam[p] + (m - p) + w.mu[-1] - n
    return p1, p2


def is_integral(w, datum):
    """True when all in-chain differences and the odd bridge are integers.

    Chains: lam^1..lam^p, lam^{p+1}..lam^m, mu^1..mu^n; bridge lam^m + mu^n
    (the pairing with an odd root, which is shift-invariant).
    """
    p = datum.p
    diffs = []
    for i in range(len(w.lam) - 1):
        if i + 1 != p:
            diffs.append(w.lam[i] - w.lam[i + 1])
    for k in range(len(w.mu) - 1):
        diffs.append(w.mu[k] - w.mu[k + 1])
    diffs.append(w.lam[0] - w.lam[-1])
    diffs.append(w.lam[-1] + w.mu[-1])
    return all(d.denominator == 1 for d in diffs)


def weight_from_delta_r(delta, r, datum):
    """sl(2|1) only: the weight (Delta, 0 | -(Delta+r)/2) with the given
    conformal labels."""
    if (datum.m, datum.n) != (2, 1):
        raise ValueError("only implemented for sl(2|1)")
    delta, r = _frac(delta), _frac(r)
    return Weight((delta, 0), (-(delta + r) / 2,))


SHIFT = shift_vector
