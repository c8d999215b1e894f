"""Supercharge descriptors and the coordinate-pair twist."""

import pytest

from superhw import Weight
from superhw.dstwist import (
    DSResult,
    SuperchargeDescriptor,
    ds_simple,
    rank,
    restrict_weight,
    twist_root_datum,
    twisted_atypicality,
)
from superhw.rootdata import Root


def odd_root(datum, i, k):
    coords = [0] * datum.dim
    coords[i - 1] = 1
    coords[datum.m + k - 1] = -1
    return Root(tuple(coords), "odd")


# ---------------------------------------------------------------------------
# descriptor validation and serialization


def test_validate_accepts_orthogonal_pair(d32):
    x = SuperchargeDescriptor(
        (odd_root(d32, 1, 1), odd_root(d32, 2, 2)), (1, -1)
    )
    assert x.validate(d32) is x
    assert rank(x) == 2


def test_validate_rejects_bad_input(d32, d21):
    r = odd_root(d32, 3, 1)
    with pytest.raises(ValueError):
        SuperchargeDescriptor((), ()).validate(d32)
    with pytest.raises(ValueError):
        SuperchargeDescriptor((r,), (1, 1)).validate(d32)
    with pytest.raises(ValueError):
        SuperchargeDescriptor((r,), (2,)).validate(d32)
    with pytest.raises(ValueError):
        SuperchargeDescriptor(
            (Root((1, -1, 0, 0, 0), "even"),), (1,)
        ).validate(d32)
    with pytest.raises(ValueError):
        SuperchargeDescriptor((-r,), (1,)).validate(d32)
    # repeated delta index
    with pytest.raises(ValueError):
        SuperchargeDescriptor(
            (odd_root(d32, 1, 1), odd_root(d32, 2, 1)), (1, 1)
        ).validate(d32)
    # more roots than the defect allows
    with pytest.raises(ValueError):
        SuperchargeDescriptor(
            (odd_root(d21, 1, 1), odd_root(d21, 2, 1)), (1, 1)
        ).validate(d21)


def test_descriptor_json_roundtrip(d32):
    obj = {"roots": [[3, 1], [2, 2]], "signs": [-1, 1], "homological": False}
    x = SuperchargeDescriptor.from_json(obj, d32)
    assert x.roots == (odd_root(d32, 3, 1), odd_root(d32, 2, 2))
    assert x.signs == (-1, 1)
    assert not x.homological
    assert x.to_json(d32) == obj
    # signs default to all +1
    y = SuperchargeDescriptor.from_json({"roots": [[3, 1]]}, d32)
    assert y.signs == (1,)


# ---------------------------------------------------------------------------
# twisting the root datum


def test_twist_datum_sl21(d21):
    x = SuperchargeDescriptor((odd_root(d21, 2, 1),), (-1,))
    t = twist_root_datum(d21, x)
    assert t.rank == 1
    assert t.keptEpsIndices == (0,)
    assert t.keptDeltaIndices == ()
    assert t.twistedDatum.m == 1 and t.twistedDatum.n == 0
    assert t.twistedDatum.oddPositive == ()


def test_twist_datum_sl32(d32):
    x = SuperchargeDescriptor((odd_root(d32, 3, 1),), (-1,))
    t = twist_root_datum(d32, x)
    tw = t.twistedDatum
    assert (tw.m, tw.n, tw.p, tw.q) == (2, 1, 2, 0)
    assert len(tw.evenPositive) == 1
    assert len(tw.oddPositive) == 2
    assert tw.defect == d32.defect - t.rank


def test_twist_datum_defect_drop(d33):
    x = SuperchargeDescriptor(
        (odd_root(d33, 3, 1), odd_root(d33, 2, 2)), (-1, 1)
    )
    t = twist_root_datum(d33, x)
    assert t.twistedDatum.defect == d33.defect - 2


def test_twist_datum_sign_split_error(d32):
    # q = 1: two minus signs over-deplete the q block
    x = SuperchargeDescriptor(
        (odd_root(d32, 3, 1), odd_root(d32, 2, 2)), (-1, -1)
    )
    with pytest.raises(ValueError):
        twist_root_datum(d32, x)


# ---------------------------------------------------------------------------
# restriction of weights


def test_restrict_weight(d32, d21):
    x = SuperchargeDescriptor((odd_root(d32, 3, 1),), (-1,))
    t = twist_root_datum(d32, x)
    w = restrict_weight(Weight((5, 4, 3), (2, 1)), t)
    assert isinstance(w, Weight)
    assert w.lam == (5, 4) and w.mu == (1,)
    # full-rank twist on sl(2|1) leaves a bare eps block
    x1 = SuperchargeDescriptor((odd_root(d21, 2, 1),), (-1,))
    t1 = twist_root_datum(d21, x1)
    assert restrict_weight(Weight((7, 0), (3,)), t1) == (7,)


def test_twisted_atypicality_degenerate_cases(d21):
    x1 = SuperchargeDescriptor((odd_root(d21, 2, 1),), (-1,))
    t1 = twist_root_datum(d21, x1)
    assert twisted_atypicality((7,), t1.twistedDatum) == 0
    assert twisted_atypicality((7,), None) == 0


# ---------------------------------------------------------------------------
# twisting simple modules


def test_ds_typical_vanishes(d21):
    x = SuperchargeDescriptor((odd_root(d21, 2, 1),), (-1,))
    res = ds_simple(Weight((-3, 0), (1,)), x, d21)
    assert res == DSResult(summands=(), exact=True)


def test_ds_trivial_weight_exact(d21):
    x = SuperchargeDescriptor((odd_root(d21, 2, 1),), (-1,))
    res = ds_simple(Weight((0, 0), (0,)), x, d21)
    assert res.exact
    assert res.summands == (((0,), 0),)


def test_ds_boundary_weight_exact(d21):
    x = SuperchargeDescriptor((odd_root(d21, 2, 1),), (-1,))
    res = ds_simple(Weight((-2, 0), (0,)), x, d21)
    assert res.exact
    assert res.summands == (((-2,), 0),)


def test_ds_nonvanishing_root_rejected(d21):
    x = SuperchargeDescriptor((odd_root(d21, 1, 1),), (1,))
    with pytest.raises(ValueError):
        ds_simple(Weight((0, 0), (0,)), x, d21)


def test_ds_atypicality_drop_rank1(d32):
    # degree-2 weight; twisting along the vanishing root eps_1 - delta_1
    # is not along the simple odd direction, so two candidates come back
    w = Weight((0, 0, 0), (-2, 0))
    x = SuperchargeDescriptor((odd_root(d32, 1, 1),), (-1,))
    res = ds_simple(w, x, d32)
    assert not res.exact
    assert 1 <= len(res.summands) <= 2
    tw = twist_root_datum(d32, x).twistedDatum
    restricted = res.summands[0][0]
    assert restricted == Weight((0, 0), (0,))
    assert twisted_atypicality(restricted, tw) == 1  # 2 - rank


def test_ds_rank2_sequential_exact(d33):
    # both steps pass through the simple odd direction of their stage
    x = SuperchargeDescriptor(
        (odd_root(d33, 3, 1), odd_root(d33, 2, 2)), (-1, 1)
    )
    res = ds_simple(Weight((0, 0, 0), (0, 0, 0)), x, d33)
    assert res.exact
    assert len(res.summands) == 1
    w, par = res.summands[0]
    assert par == 0
    assert w == Weight((0,), (0,))
    tw = twist_root_datum(d33, x).twistedDatum
    assert twisted_atypicality(w, tw) == 3 - 2


def test_ds_rank_exceeds_atypicality(d33):
    from fractions import Fraction

    from superhw import atypicality_degree

    # a rank-2 twist of a degree-1 weight vanishes identically
    w = Weight((0, Fraction(1, 3), Fraction(1, 5)), (0, 0, 0))
    assert atypicality_degree(w, d33).degree == 1
    x = SuperchargeDescriptor(
        (odd_root(d33, 3, 1), odd_root(d33, 2, 2)), (-1, 1)
    )
    assert ds_simple(w, x, d33) == DSResult(summands=(), exact=True)
