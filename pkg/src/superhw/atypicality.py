"""Atypicality of highest weights: vanishing odd roots and their matchings.

The degree of atypicality is the largest number of mutually orthogonal odd
positive roots on which (w + rho, -) vanishes.  Two distinct odd roots
eps_i - delta_k and eps_j - delta_l are orthogonal precisely when i != j and
k != l, so the degree is a maximum matching in a bipartite graph.
"""

from dataclasses import dataclass

from .rootdata import bilinear_form
from .weights import rho_pairing


@dataclass(frozen=True)
class AtypicalityReport:
    vanishingRoots: tuple
    degree: int
    witness: tuple
    isMaximal: bool

    def to_json(self):
        return {
            "vanishing_roots": [list(r.coords) for r in self.vanishingRoots],
            "degree": self.degree,
            "witness": [list(r.coords) for r in self.witness],
            "is_maximal": self.isMaximal,
        }


def vanishing_odd_roots(w, datum):
    """The odd positive roots alpha with (w + rho, alpha) = 0."""
    shifted = w.add_coords(datum.rho)
    return [
        alpha
        for alpha in datum.oddPositive
        if bilinear_form(shifted, alpha, datum) == 0
    ]


def _root_pair(alpha, datum):
    """(i, k) indices (1-based) of the odd root eps_i - delta_k."""
    i = next(a for a in range(datum.m) if alpha.coords[a] == 1) + 1
    k = next(
        a for a in range(datum.n) if alpha.coords[datum.m + a] == -1
    ) + 1
    return i, k


def _max_matching_size(edges, m, n):
    """Maximum bipartite matching via augmenting paths.

    edges: set of (i, k) pairs, 1-based.
    """
    adj = {}
    for i, k in edges:
        adj.setdefault(i, []).append(k)
    for v in adj.values():
        v.sort()
    match_right = {}

    def augment(i, seen):
        for k in adj.get(i, ()):
            if k in seen:
                continue
            seen.add(k)
            if k not in match_right or augment(match_right[k], seen):
                match_right[k] = i
                return True
        return False

    size = 0
    for i in sorted(adj):
        if augment(i, set()):
            size += 1
    return size


def atypicality_degree(w, datum):
    """Degree of atypicality with a lexicographically smallest witness.

    The witness is built greedily: scan (i, k) pairs in lexicographic order
    and keep an edge whenever forcing it into the matching does not lower
    the maximum matching size of the remainder.
    """
    roots = vanishing_odd_roots(w, datum)
    pair_of = {_root_pair(r, datum): r for r in roots}
    edges = set(pair_of)
    degree = _max_matching_size(edges, datum.m, datum.n)

    witness_pairs = []
    used_i, used_k = set(), set()
    remaining_needed = degree
    for i, k in sorted(edges):
        if remaining_needed == 0:
            break
        if i in used_i or k in used_k:
            continue
        rest = {
            (a, b)
            for (a, b) in edges
            if a != i and b != k and a not in used_i and b not in used_k
        }
        if _max_matching_size(rest, datum.m, datum.n) >= remaining_needed - 1:
            witness_pairs.append((i, k))
            used_i.add(i)
            used_k.add(k)
            remaining_needed -= 1

    witness = tuple(pair_of[p] for p in witness_pairs)
    return AtypicalityReport(
        vanishingRoots=tuple(roots),
        degree=degree,
        witness=witness,
        isMaximal=(degree == datum.defect),
    )
