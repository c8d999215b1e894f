"""Exact highest-weight module computations for gl(m|n).

This is a small, self-contained PBW engine used as an independent oracle by
the test suite.  It computes weight multiplicities of simple highest-weight
modules over gl(m|n) (equivalently sl(m|n) up to the overall shift) directly
from the definition: the multiplicity of a weight in L(lam) is the rank of
the pairing between lowering monomials and raising monomials of complementary
weight, evaluated in the Verma module.  Everything is exact over Fraction.

Conventions: basis indices 0..m+n-1, the first m of even parity, the last n
odd.  E(a,b) denotes the usual matrix unit; positive root vectors are the
strictly upper-triangular E(a,b) with a < b.  Weights are coordinate tuples
in the (eps | delta) basis.
"""

from fractions import Fraction
from functools import lru_cache
import itertools


class SuperLieEngine:
    def __init__(self, m, n):
        self.m = m
        self.n = n
        self.dim = m + n
        # fixed PBW order for the lowering generators E(a,b), a > b
        self.neg_gens = [(a, b) for b in range(self.dim) for a in range(b + 1, self.dim)]
        self.neg_index = {g: i for i, g in enumerate(self.neg_gens)}

    def parity(self, idx):
        return 0 if idx < self.m else 1

    def gen_parity(self, gen):
        a, b = gen
        return (self.parity(a) + self.parity(b)) % 2

    def bracket(self, x, y):
        """Super bracket [E_x, E_y] as a list of (gen, coeff)."""
        (i, j), (k, l) = x, y
        sign = (-1) ** (self.gen_parity(x) * self.gen_parity(y))
        out = []
        if j == k:
            out.append(((i, l), 1))
        if l == i:
            out.append(((k, j), -sign))
        # merge if both terms are the same generator (i==k and j==l case)
        if len(out) == 2 and out[0][0] == out[1][0]:
            c = out[0][1] + out[1][1]
            return [(out[0][0], c)] if c else []
        return out

    # ----- normal ordering of lowering words ---------------------------------

    def normal_order(self, seq, coeff=1):
        """Rewrite a word of lowering generators into PBW normal form.

        Returns a dict {exponent_tuple: coeff}.  Odd generators square to
        zero; the exponent tuple is indexed by self.neg_gens.
        """
        out = {}
        work = [(list(seq), Fraction(coeff))]
        while work:
            seq, c = work.pop()
            # find first out-of-order adjacent pair
            pos = -1
            for t in range(len(seq) - 1):
                if self.neg_index[seq[t]] > self.neg_index[seq[t + 1]]:
                    pos = t
                    break
                if seq[t] == seq[t + 1] and self.gen_parity(seq[t]):
                    pos = -2  # odd square: word vanishes
                    break
            if pos == -2:
                continue
            if pos == -1:
                expo = [0] * len(self.neg_gens)
                ok = True
                for g in seq:
                    expo[self.neg_index[g]] += 1
                    if expo[self.neg_index[g]] > 1 and self.gen_parity(g):
                        ok = False
                        break
                if ok:
                    key = tuple(expo)
                    out[key] = out.get(key, Fraction(0)) + c
                    if not out[key]:
                        del out[key]
                continue
            x, y = seq[pos], seq[pos + 1]
            sign = (-1) ** (self.gen_parity(x) * self.gen_parity(y))
            swapped = seq[:pos] + [y, x] + seq[pos + 2:]
            work.append((swapped, c * sign))
            for g, bc in self.bracket(x, y):
                work.append((seq[:pos] + [g] + seq[pos + 2:], c * bc))
        return out

    def expand(self, mono):
        """Exponent tuple -> explicit word (list of generators)."""
        seq = []
        for g, e in zip(self.neg_gens, mono):
            seq.extend([g] * e)
        return seq

    # ----- Verma module action ----------------------------------------------

    def apply_gen(self, gen, seq, lam):
        """Act with a single generator on (word seq applied to the h.w. vector).

        lam is the highest weight as a coordinate tuple.  Returns a dict
        {exponent_tuple: coeff}.
        """
        a, b = gen
        if a > b:  # lowering
            return self.normal_order([gen] + seq)
        if not seq:
            if a == b:
                return {tuple([0] * len(self.neg_gens)): Fraction(lam[a])}
            return {}
        out = {}
        h, rest = seq[0], seq[1:]
        sign = (-1) ** (self.gen_parity(gen) * self.gen_parity(h))
        for mono, c in self.apply_gen(gen, rest, lam).items():
            for mono2, c2 in self.normal_order([h] + self.expand(mono)).items():
                out[mono2] = out.get(mono2, Fraction(0)) + sign * c * c2
        for g2, bc in self.bracket(gen, h):
            for mono, c in self.apply_gen(g2, rest, lam).items():
                out[mono] = out.get(mono, Fraction(0)) + bc * c
        return {k: v for k, v in out.items() if v}

    def apply_vector(self, gen, vec, lam):
        out = {}
        for mono, c in vec.items():
            for mono2, c2 in self.apply_gen(gen, self.expand(mono), lam).items():
                out[mono2] = out.get(mono2, Fraction(0)) + c * c2
        return {k: v for k, v in out.items() if v}

    # ----- weight bookkeeping ------------------------------------------------

    def root_vector(self, gen):
        """Coordinate vector of the root of E(a,b) (weight of the generator)."""
        a, b = gen
        v = [0] * self.dim
        v[a] += 1
        v[b] -= 1
        return tuple(v)

    def depth_vector(self, mono):
        """Expansion of the total weight drop in the simple-root basis."""
        drop = [0] * self.dim
        for g, e in zip(self.neg_gens, mono):
            a, b = g
            drop[b] += e
            drop[a] -= e
        # prefix sums give the coefficients over e_j - e_{j+1}
        coeffs = []
        s = 0
        for j in range(self.dim - 1):
            s += drop[j]
            coeffs.append(s)
        return tuple(coeffs)

    def lowering_monomials(self, max_depth):
        """All PBW exponent tuples with total depth <= max_depth, grouped by depth vector."""
        gens = self.neg_gens
        depths = []
        for g in gens:
            a, b = g
            depths.append(a - b)  # total simple-root depth of the root
        groups = {}

        def rec(i, expo, used):
            if i == len(gens):
                mono = tuple(expo)
                dv = self.depth_vector(mono)
                groups.setdefault(dv, []).append(mono)
                return
            cap = 1 if self.gen_parity(gens[i]) else (max_depth - used) // depths[i]
            for e in range(0, cap + 1):
                if used + e * depths[i] <= max_depth:
                    expo.append(e)
                    rec(i + 1, expo, used + e * depths[i])
                    expo.pop()

        rec(0, [], 0)
        return groups

    # ----- simple character --------------------------------------------------

    def simple_character(self, lam, max_depth):
        """Weight multiplicities of L(lam) up to total depth max_depth.

        Returns {depth_vector: multiplicity} with the depth vector expressed
        in simple-root coordinates.
        """
        lam = tuple(Fraction(x) for x in lam)
        groups = self.lowering_monomials(max_depth)
        result = {}
        for dv, monos in sorted(groups.items(), key=lambda kv: sum(kv[0])):
            if sum(dv) == 0:
                result[dv] = 1
                continue
            # raising monomials of the same weight: transpose the lowering ones
            rank = self._pairing_rank(monos, lam)
            if rank:
                result[dv] = rank
        return result

    def _pairing_rank(self, monos, lam):
        rows = []
        zero = tuple([0] * len(self.neg_gens))
        for u in monos:
            # raising word: transpose each generator, apply in reverse order
            word = [(b, a) for (a, b) in self.expand(u)]
            row = []
            for b_mono in monos:
                vec = {b_mono: Fraction(1)}
                for g in reversed(word):
                    vec = self.apply_vector(g, vec, lam)
                    if not vec:
                        break
                row.append(vec.get(zero, Fraction(0)))
            rows.append(row)
        return exact_rank(rows)


def exact_rank(rows):
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        pv = mat[r][c]
        for i in range(r + 1, len(mat)):
            if mat[i][c]:
                f = mat[i][c] / pv
                for j in range(c, ncols):
                    mat[i][j] -= f * mat[r][j]
        r += 1
        rank += 1
        if r == len(mat):
            break
    return rank
