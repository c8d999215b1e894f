"""Exact matrix model of the supersymmetric oscillator on C[x, eta].

The module is truncated at x-degree N; basis monomials x^a eta^b with
a <= N, b in {0,1}.  All matrix entries are Gaussian rationals and every
kernel / bracket / adjoint computation is exact.  Differential operators
shift the x-degree by at most one or two, so identities are only asserted
on the interior block a <= N - 2.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial


class GaussianRational:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def of(cls, z):
        if isinstance(z, GaussianRational):
            return z
        if isinstance(z, complex):
            raise TypeError("floats are not allowed; use exact rationals")
        return cls(z, 0)

    def __add__(self, o):
        o = GaussianRational.of(o)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        o = GaussianRational.of(o)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return GaussianRational.of(o) - self

    def __mul__(self, o):
        o = GaussianRational.of(o)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = GaussianRational.of(o)
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def conj(self):
        return GaussianRational(self.re, -self.im)

    def abs2(self):
        return self.re * self.re + self.im * self.im

    def __eq__(self, o):
        o = GaussianRational.of(o)
        return self.re == o.re and self.im == o.im

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"({self.re}+{self.im}i)"


GR0 = GaussianRational(0)
GR1 = GaussianRational(1)


@dataclass(frozen=True)
class TruncatedFock:
    """Basis bookkeeping for the degree-N truncation of C[x, eta]."""

    N: int

    @property
    def dim(self):
        return 2 * (self.N + 1)

    def index(self, a, b):
        if not (0 <= a <= self.N and b in (0, 1)):
            raise ValueError("monomial outside the truncation")
        return b * (self.N + 1) + a

    def monomial(self, idx):
        b, a = divmod(idx, self.N + 1)
        return a, b

    def norm(self, idx):
        a, _b = self.monomial(idx)
        return Fraction(factorial(a))

    def parity(self, idx):
        a, b = self.monomial(idx)
        return (a + b) % 2

    def weight_label(self, idx):
        """(Delta, r) of the monomial per H = -x d_x - 1/2, J = eta d_eta - 1/2."""
        a, b = self.monomial(idx)
        return (-Fraction(a) - Fraction(1, 2), Fraction(b) - Fraction(1, 2))


@dataclass(frozen=True)
class FockOperator:
    matrix: tuple  # rows of tuples of GaussianRational
    parity: str  # "even" or "odd"
    fock: TruncatedFock

    def entry(self, i, j):
        return self.matrix[i][j]

    def apply(self, vec):
        n = self.fock.dim
        out = [GR0] * n
        for j, c in enumerate(vec):
            if not c:
                continue
            col = [self.matrix[i][j] for i in range(n)]
            for i in range(n):
                if col[i]:
                    out[i] = out[i] + col[i] * c
        return out

    def scaled(self, c):
        c = GaussianRational.of(c)
        return FockOperator(
            tuple(
                tuple(c * e for e in row) for row in self.matrix
            ),
            self.parity,
            self.fock,
        )

    def plus(self, other, sign=1):
        s = GaussianRational.of(sign)
        return FockOperator(
            tuple(
                tuple(a + s * b for a, b in zip(r1, r2))
                for r1, r2 in zip(self.matrix, other.matrix)
            ),
            self.parity,
            self.fock,
        )

    def compose(self, other):
        """self after other (matrix product self @ other)."""
        n = self.fock.dim
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                s = GR0
                for k in range(n):
                    a = self.matrix[i][k]
                    if a:
                        b = other.matrix[k][j]
                        if b:
                            s = s + a * b
                row.append(s)
            rows.append(tuple(row))
        parity = "even" if self.parity == other.parity else "odd"
        return FockOperator(tuple(rows), parity, self.fock)


def _from_action(fock, action, parity):
    """Matrix from a monomial action (a, b) -> list of (coeff, a', b').

    Images outside the truncation are dropped.
    """
    n = fock.dim
    cols = [[GR0] * n for _ in range(n)]
    for j in range(n):
        a, b = fock.monomial(j)
        for coeff, a2, b2 in action(a, b):
            if 0 <= a2 <= fock.N and b2 in (0, 1):
                i = fock.index(a2, b2)
                cols[j][i] = cols[j][i] + GaussianRational.of(coeff)
    rows = tuple(
        tuple(cols[j][i] for j in range(n)) for i in range(n)
    )
    return FockOperator(rows, parity, fock)


def build_generators(N):
    """The nine differential operators of the oscillator realization."""
    if N < 4:
        raise ValueError("need N >= 4")
    fock = TruncatedFock(N)

    def op(action, parity):
        return _from_action(fock, action, parity)

    E = op(
        lambda a, b: [(Fraction(-a * (a - 1), 2), a - 2, b)] if a >= 2 else [],
        "even",
    )  # -1/2 d_x^2
    H = op(lambda a, b: [(-Fraction(a) - Fraction(1, 2), a, b)], "even")
    F = op(lambda a, b: [(Fraction(1, 2), a + 2, b)], "even")
    J = op(lambda a, b: [(Fraction(b) - Fraction(1, 2), a, b)], "even")
    Q = op(lambda a, b: [(1, a + 1, 1)] if b == 0 else [], "odd")  # eta x
    Qbar = op(lambda a, b: [(1, a + 1, 0)] if b == 1 else [], "odd")  # d_eta x
    S = op(lambda a, b: [(-a, a - 1, 1)] if b == 0 and a >= 1 else [], "odd")
    Sbar = op(
        lambda a, b: [(a, a - 1, 0)] if b == 1 and a >= 1 else [], "odd"
    )  # d_eta d_x
    return {
        "E": E,
        "H": H,
        "F": F,
        "J": J,
        "Q": Q,
        "Qbar": Qbar,
        "S": S,
        "Sbar": Sbar,
        "fock": fock,
    }


def bracket(A, B):
    """Superbracket [A,B] = AB - (-1)^{p(A)p(B)} BA."""
    sign = -1 if (A.parity == "odd" and B.parity == "odd") else 1
    return A.compose(B).plus(B.compose(A), -sign)


def adjoint(A):
    """Adjoint with respect to the weighted inner product <x^a eta^b> = a!."""
    fock = A.fock
    n = fock.dim
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(
                A.matrix[j][i].conj() * (fock.norm(j) / fock.norm(i))
            )
        rows.append(tuple(row))
    return FockOperator(tuple(rows), A.parity, fock)


def operators_equal_interior(A, B, fock, margin=2):
    """Entry-wise equality on the block with x-degree <= N - margin."""
    cutoff = fock.N - margin
    for j in range(fock.dim):
        aj, _ = fock.monomial(j)
        if aj > cutoff:
            continue
        for i in range(fock.dim):
            ai, _ = fock.monomial(i)
            if ai > cutoff:
                continue
            if A.matrix[i][j] != B.matrix[i][j]:
                return False
    return True


def family_supercharge(r, t, N):
    """Q_(r,t) = r Q - t S = eta (r x + t d_x)."""
    r = GaussianRational.of(r)
    t = GaussianRational.of(t)
    if not r and not t:
        raise ValueError("(r, t) must not both vanish")
    gens = build_generators(N)
    return gens["Q"].scaled(r).plus(gens["S"].scaled(t), -1)


def _kernel_basis(columns, nrows):
    """Exact kernel of the matrix with the given columns (lists of
    GaussianRational), via Gaussian elimination.  Returns basis vectors in
    the column-index space."""
    ncols = len(columns)
    rows = [
        [columns[j][i] for j in range(ncols)] for i in range(nrows)
    ]
    pivots = []
    rank = 0
    for col in range(ncols):
        sel = None
        for r2 in range(rank, nrows):
            if rows[r2][col]:
                sel = r2
                break
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [e / pv for e in rows[rank]]
        for r2 in range(nrows):
            if r2 != rank and rows[r2][col]:
                f = rows[r2][col]
                rows[r2] = [
                    e - f * g for e, g in zip(rows[r2], rows[rank])
                ]
        pivots.append(col)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [GR0] * ncols
        vec[fcol] = GR1
        for r2, pcol in enumerate(pivots):
            vec[pcol] = -rows[r2][fcol]
        basis.append(vec)
    return basis


def _windowed_kernel(ops, fock, window):
    """Joint kernel of the operators on span{x-degree <= window}, with the
    equations also restricted to components of x-degree <= window."""
    domain = [
        j for j in range(fock.dim) if fock.monomial(j)[0] <= window
    ]
    rows_keep = domain
    columns = []
    for j in domain:
        col = []
        for A in ops:
            for i in rows_keep:
                col.append(A.matrix[i][j])
        columns.append(col)
    basis = _kernel_basis(columns, len(rows_keep) * len(ops))
    out = []
    for vec in basis:
        full = [GR0] * fock.dim
        for c, j in zip(vec, domain):
            full[j] = c
        out.append(full)
    return out


def formal_kernel(r, t, N):
    """Joint kernel of Q_(r,t) and its adjoint on the interior window.

    For nonzero r, t this is two-dimensional, spanned by the truncations of
    the Gaussian kernel states f_plus and eta * f_minus.
    """
    r = GaussianRational.of(r)
    t = GaussianRational.of(t)
    if not r or not t:
        raise ValueError("formal_kernel requires r and t nonzero")
    Qrt = family_supercharge(r, t, N)
    return _windowed_kernel(
        [Qrt, adjoint(Qrt)], Qrt.fock, Qrt.fock.N - 2
    )


def norm_series(r, t, K):
    """Partial sums of the squared norm of the even kernel state.

    The k-th term is |r/2t|^{2k} (2k)!/(k!)^2; the series converges to
    (1 - |r/t|^2)^{-1/2} exactly when |r| < |t|.  Returns
    (partial_sums, ratio, converges) with everything exact.
    """
    r = GaussianRational.of(r)
    t = GaussianRational.of(t)
    if not t:
        raise ValueError("t must be nonzero")
    rho = r.abs2() / t.abs2()  # |r/t|^2
    z = rho / 4
    sums = []
    total = Fraction(0)
    term = Fraction(1)
    for k in range(K + 1):
        total += term
        sums.append(total)
        term = term * z * ((2 * k + 2) * (2 * k + 1)) / ((k + 1) * (k + 1))
    return sums, rho, rho < 1


def closed_form_norm(rho, digits=30):
    """(1 - rho)^{-1/2} as a high-precision Fraction, for rho < 1."""
    if rho >= 1:
        raise ValueError("closed form requires |r| < |t|")
    from decimal import Decimal, getcontext

    getcontext().prec = digits + 10
    val = (Decimal(1) - Decimal(rho.numerator) / Decimal(rho.denominator))
    inv_sqrt = Decimal(1) / val.sqrt()
    return Fraction(inv_sqrt)


def index_family(r, t):
    """(index on the even module, index on the odd module) for Q_(r,t).

    Decided by normalizability of the two kernel states: the even state
    survives for |r| < |t| (index +1 on the even module), the odd one for
    |r| > |t| (index -1 on the odd module).  The marginal circle is an
    error.
    """
    r = GaussianRational.of(r)
    t = GaussianRational.of(t)
    if t.abs2() == 0:
        # Q_(r,0) = r*Q: the odd kernel state is the constant-eta vector.
        return (0, -1)
    if r.abs2() == 0:
        return (1, 0)
    rho = r.abs2() / t.abs2()
    if rho == 1:
        raise ValueError("marginal supercharge |r| = |t|: index undefined")
    _, _, plus_converges = norm_series(r, t, 0)
    if plus_converges:
        return (1, 0)
    return (0, -1)


def oscillator_indices(N=12):
    """The four golden index values (even/Q, odd/Q, even/S, odd/S).

    Computed from the exact kernels of Xi = [A, adjoint(A)] for A = Q and
    A = S on the interior block, split by module parity, with supertrace
    sign (-1)^b.
    """
    gens = build_generators(N)
    fock = gens["fock"]
    out = []
    for name in ("Q", "S"):
        A = gens[name]
        xi = bracket(A, adjoint(A))
        for sigma in (0, 1):  # even module, odd module
            value = 0
            for b0 in (0, 1):
                idxs = [
                    j
                    for j in range(fock.dim)
                    if fock.parity(j) == sigma
                    and fock.monomial(j)[1] == b0
                    and fock.monomial(j)[0] <= fock.N - 2
                ]
                if not idxs:
                    continue
                # Xi preserves the eta-number and the x-degree; check that
                # the sub-block really is closed before using it.
                for j in idxs:
                    for i in range(fock.dim):
                        if i not in idxs and xi.matrix[i][j]:
                            ai, _ = fock.monomial(i)
                            if ai <= fock.N - 2:
                                raise AssertionError(
                                    "Xi does not preserve the grading"
                                )
                cols = [
                    [xi.matrix[i][j] for i in idxs] for j in idxs
                ]
                kdim = len(_kernel_basis(cols, len(idxs)))
                value += kdim if b0 == 0 else -kdim
            out.append(value)
    # out = [Q/even, Q/odd, S/even, S/odd]
    return (out[0], out[1], out[2], out[3])


def bps_report(v, N, gens=None):
    """Annihilator dimension of v inside the span of {Q, Qbar, S, Sbar}.

    A state is BPS when the annihilator exceeds half the odd dimension
    (here: dimension > 2); the BPS degree is (dim - 2)/2.
    """
    if gens is None:
        gens = build_generators(N)
    fock = gens["fock"]
    vec = [GaussianRational.of(c) for c in v]
    if not any(vec):
        raise ValueError("state must be nonzero")
    images = [
        gens[name].apply(vec) for name in ("Q", "Qbar", "S", "Sbar")
    ]
    window = fock.N - 2
    rows_keep = [
        i for i in range(fock.dim) if fock.monomial(i)[0] <= window
    ]
    columns = [[img[i] for i in rows_keep] for img in images]
    ann = len(_kernel_basis(columns, len(rows_keep)))
    return ann, ann > 2, Fraction(ann - 2, 2)


def state_from_string(text, fock):
    """Parse simple monomial states like "eta", "x^2*eta", "1", "x"."""
    text = text.strip()
    a = 0
    b = 0
    if text in ("1", ""):
        pass
    else:
        for part in text.replace(" ", "").split("*"):
            if part == "eta":
                b += 1
            elif part == "x":
                a += 1
            elif part.startswith("x^"):
                a += int(part[2:])
            else:
                raise ValueError(f"cannot parse state component {part!r}")
    if b > 1:
        raise ValueError("eta^2 = 0")
    vec = [GR0] * fock.dim
    vec[fock.index(a, b)] = GR1
    return vec
