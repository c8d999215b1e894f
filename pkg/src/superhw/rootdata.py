"""Root system data for the special linear Lie superalgebra sl(m|n).

Roots live in the unreduced (m+n)-coordinate basis (eps_1..eps_m |
delta_1..delta_n).  The invariant bilinear form is positive on the eps block
and negative on the delta block.  A real form su(p,q|n) is fixed by a split
m = p + q of the even eps-block; it determines which even roots are compact.

Everything here is immutable and exact (integers and Fractions only).
"""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Root:
    """A root in raw (eps|delta) coordinates with its parity.

    Even roots are eps_i - eps_j or delta_k - delta_l; odd roots are
    +-(eps_i - delta_k).  Coordinates are a tuple of integers in {-1,0,1}.
    """

    coords: tuple
    parity: str  # "even" or "odd"

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise ValueError("parity must be 'even' or 'odd'")

    def __neg__(self):
        return Root(tuple(-c for c in self.coords), self.parity)

    def __add__(self, other):
        if len(self.coords) != len(other.coords):
            raise ValueError("dimension mismatch")
        coords = tuple(a + b for a, b in zip(self.coords, other.coords))
        parity = "even" if self.parity == other.parity else "odd"
        return Root(coords, parity)


@dataclass(frozen=True)
class RootDatum:
    """Positive system, compact/noncompact split and Weyl vectors of sl(m|n)."""

    m: int
    n: int
    p: int
    q: int
    evenPositive: tuple
    oddPositive: tuple
    compactPositive: tuple
    noncompactPositive: tuple
    simpleRoots: tuple
    rhoEven: tuple
    rhoOdd: tuple
    rhoCompact: tuple
    rho: tuple
    defect: int

    @property
    def dim(self):
        return self.m + self.n

    def to_json(self):
        positive = [
            {"coords": list(r.coords), "parity": r.parity}
            for r in self.evenPositive + self.oddPositive
        ]
        return {
            "m": self.m,
            "n": self.n,
            "p": self.p,
            "q": self.q,
            "positive_roots": positive,
        }


def _coords(obj):
    """Coordinate tuple of a Root, a weight-like object, or a raw sequence."""
    if isinstance(obj, Root):
        return obj.coords
    if hasattr(obj, "coords") and callable(obj.coords):
        return obj.coords()
    return tuple(obj)


def build_root_datum(p, q, n):
    """Construct the standard positive system of sl(p+q|n) with split (p,q)."""
    if p < 0 or q < 0 or n < 0:
        raise ValueError("p, q, n must be non-negative")
    m = p + q
    if m < 2 or n < 1:
        raise ValueError("need p+q >= 2 and n >= 1")
    if m + n < 3:
        raise ValueError("need p+q+n >= 3")
    return build_root_datum_relaxed(p, q, n)


def build_root_datum_relaxed(p, q, n):
    """As build_root_datum but admitting tiny algebras (e.g. sl(1|1), sl(1|0))
    arising as twists of larger ones; root lists may be empty."""
    if p < 0 or q < 0 or n < 0:
        raise ValueError("p, q, n must be non-negative")
    m = p + q
    if m + n < 1:
        raise ValueError("empty algebra")

    def unit(a, b):
        v = [0] * (m + n)
        v[a] += 1
        v[b] -= 1
        return tuple(v)

    even_pos = []
    for i in range(m):
        for j in range(i + 1, m):
            even_pos.append(Root(unit(i, j), "even"))
    for k in range(n):
        for l in range(k + 1, n):
            even_pos.append(Root(unit(m + k, m + l), "even"))
    odd_pos = [
        Root(unit(i, m + k), "odd") for i in range(m) for k in range(n)
    ]

    noncompact = [
        r
        for r in even_pos
        if any(r.coords[i] == 1 for i in range(p))
        and any(r.coords[j] == -1 for j in range(p, m))
    ]
    nc_set = set(noncompact)
    compact = [r for r in even_pos if r not in nc_set]

    simple = []
    for j in range(m + n - 1):
        parity = "odd" if j == m - 1 else "even"
        simple.append(Root(unit(j, j + 1), parity))

    half = Fraction(1, 2)
    rho_even = [Fraction(0)] * (m + n)
    for r in even_pos:
        for a, c in enumerate(r.coords):
            rho_even[a] += half * c
    rho_odd = [Fraction(0)] * (m + n)
    for r in odd_pos:
        for a, c in enumerate(r.coords):
            rho_odd[a] += half * c
    rho_compact = [Fraction(0)] * (m + n)
    for r in compact:
        for a, c in enumerate(r.coords):
            rho_compact[a] += half * c

    # Shift rho_even - rho_odd to the integer representative
    # (m, m-1, ..., 1 | -1, -2, ..., -n).
    rho = tuple(Fraction(m - i) for i in range(m)) + tuple(
        Fraction(-(k + 1)) for k in range(n)
    )

    return RootDatum(
        m=m,
        n=n,
        p=p,
        q=q,
        evenPositive=tuple(even_pos),
        oddPositive=tuple(odd_pos),
        compactPositive=tuple(compact),
        noncompactPositive=tuple(noncompact),
        simpleRoots=tuple(simple),
        rhoEven=tuple(rho_even),
        rhoOdd=tuple(rho_odd),
        rhoCompact=tuple(rho_compact),
        rho=rho,
        defect=min(m, n),
    )


def bilinear_form(u, v, datum):
    """The invariant form: +1 on each eps coordinate, -1 on each delta one."""
    cu, cv = _coords(u), _coords(v)
    if len(cu) != datum.dim or len(cv) != datum.dim:
        raise ValueError("dimension mismatch")
    m = datum.m
    total = Fraction(0)
    for a in range(m):
        c = cv[a]
        if c:
            total += cu[a] * c
    for a in range(m, datum.dim):
        c = cv[a]
        if c:
            total -= cu[a] * c
    return total


def shift_vector(datum):
    """The direction (1,...,1 | -1,...,-1) that pairs to zero with every root."""
    return tuple([1] * datum.m + [-1] * datum.n)


def is_degenerate_direction(v, datum):
    """True when v is proportional to the shift vector and m = n.

    For m = n the form vanishes on the shift direction, so the induced form
    on the weight quotient is degenerate exactly along such vectors.
    """
    if datum.m != datum.n:
        return False
    cv = _coords(v)
    sv = shift_vector(datum)
    ratios = set()
    for a, b in zip(cv, sv):
        ratios.add(Fraction(a) / b)
    return len(ratios) == 1


def even_reflection(alpha, beta, datum):
    """Reflect beta in the hyperplane of the even root alpha."""
    if alpha.parity != "even":
        raise ValueError("reflection requires an even root")
    aa = bilinear_form(alpha, alpha, datum)
    if aa == 0:
        raise ValueError("cannot reflect in an isotropic root")
    cb = _coords(beta)
    coef = 2 * bilinear_form(cb, alpha, datum) / aa
    new = tuple(Fraction(b) - coef * a for b, a in zip(cb, alpha.coords))
    if isinstance(beta, Root):
        return Root(tuple(int(c) for c in new), beta.parity)
    return new


def odd_reflection(alpha, simple_system, datum):
    """New simple system after reflecting at the simple isotropic root alpha.

    The rule: alpha goes to -alpha; a simple root beta with (beta, alpha) != 0
    goes to beta + alpha; the rest stay.
    """
    if alpha.parity != "odd":
        raise ValueError("odd reflection requires an odd root")
    if alpha not in simple_system:
        raise ValueError("root is not simple in the given system")
    out = []
    for beta in simple_system:
        if beta == alpha:
            out.append(-alpha)
        elif bilinear_form(beta, alpha, datum) != 0:
            out.append(beta + alpha)
        else:
            out.append(beta)
    return out


def depth_vector(drop, datum):
    """Expand a non-negative weight drop over the simple roots.

    Every simple root is e_j - e_{j+1} in raw coordinates, so the expansion
    coefficients are the prefix sums of the drop vector.  Raises if the drop
    is not in the non-negative root lattice.
    """
    cd = _coords(drop)
    coeffs = []
    s = Fraction(0)
    for j in range(datum.dim - 1):
        s += Fraction(cd[j])
        if s.denominator != 1 or s < 0:
            raise ValueError("drop is not a non-negative integer root combination")
        coeffs.append(int(s))
    if s + Fraction(cd[datum.dim - 1]) != 0:
        raise ValueError("drop does not lie in the root lattice")
    return tuple(coeffs)


def root_parity(coords, datum):
    """Parity of a root given by raw coordinates."""
    eps_support = any(c != 0 for c in coords[: datum.m])
    delta_support = any(c != 0 for c in coords[datum.m :])
    return "odd" if (eps_support and delta_support) else "even"
