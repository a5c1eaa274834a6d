from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domviews import Engine, Event, Mode
from domviews.constraints import Constraint, LinearEq
from domviews.domain_views import affine_dview, negation_dview, shift_dview
from domviews.variable_views import affine_view

from viewstacks import build_stack, chain, random_fns


class Dummy(Constraint):
    def register(self):
        pass

    def propagate(self):
        return True


def var(backend, values):
    eng = Engine(Mode.DOMVIEW, backend, record_events=True)
    return eng, eng.int_var(None, values=values)


def test_member_and_remove_examples(backend):
    _, x = var(backend, [1, 2])
    y = shift_dview(x, 3)
    assert y.member(4)
    assert y.remove(5) and x.values() == [1]
    assert not y.remove(4) and x.values() == [1]
    _, x = var(backend, [1])
    y = affine_dview(x, 2, 1)
    assert y.member(3) and not y.member(4)
    assert y.remove(4) and x.values() == [1]


def test_agrees_with_variable_view(backend):
    _, x = var(backend, [-2, 0, 1, 4])
    dv = affine_dview(x, -3, 2)
    eng = Engine(Mode.VARVIEW, backend)
    vv = affine_view(eng.int_var(None, values=[-2, 0, 1, 4]), -3, 2)
    assert all(dv.member(v) == vv.member(v) for v in range(-20, 20))


def test_watch_lists_stay_local(backend):
    eng, x = var(backend, [0, 1, 2])
    y = shift_dview(x, 1)
    z = shift_dview(y, 1)
    c1, c2 = Dummy([z]), Dummy([z])
    z.watch_value(c1)
    z.watch_value(c2)
    z.watch(c1)
    assert x.sc == [] and x.scv == [] and y.sc == [] and y.scv == []
    assert z.scv == [c1, c2] and z.sc == [c1]
    x.remove(0)
    assert Event(c1, z, 2) in eng.log and Event(c2, z, 2) in eng.log


def test_wake_counts(backend):
    eng, x = var(backend, [0, 1, 2])
    y = shift_dview(x, 1)
    c1, c2 = Dummy([y]), Dummy([y])
    y.watch(c1)
    y.watch(c2)
    y.wake()
    assert eng.pending() == [Event(c1, y), Event(c2, y)]
    eng.flush()
    z = shift_dview(y, 1)
    cz = Dummy([z])
    z.watch(cz)
    x.remove(1)
    assert [e for e in eng.log if e.kind.value == "var"][-3:] == [Event(c1, y), Event(c2, y), Event(cz, z)]


def test_silent_without_watchers(backend):
    eng, x = var(backend, [0, 1, 2])
    shift_dview(x, 1)
    x.remove(1)
    assert eng.log == []


def test_wake_value_translates_once(backend):
    eng, x = var(backend, [0, 1, 2, 3])
    y = shift_dview(x, 3)
    z = affine_dview(y, 2, 1)
    cy, cz = Dummy([y]), Dummy([z])
    y.watch_value(cy)
    z.watch_value(cz)
    x.remove(2)
    assert eng.log == [Event(cy, y, 5), Event(cz, z, 11)]


def test_forwarding_without_own_watchers(backend):
    eng, x = var(backend, [0, 1, 2])
    y = shift_dview(x, 3)
    z = shift_dview(y, 1)
    cz = Dummy([z])
    z.watch_value(cz)
    x.remove(2)
    assert eng.log == [Event(cz, z, 6)]


def test_update_examples(backend):
    _, x = var(backend, list(range(0, 6)))
    assert shift_dview(x, 3).update_min(6)
    assert x.values() == [3, 4, 5]
    _, x = var(backend, list(range(-4, 3)))
    assert affine_dview(x, -1, 0).update_min(2)
    assert x.values() == [-4, -3, -2]
    _, x = var(backend, list(range(0, 5)))
    y = affine_dview(x, 2, 1)
    assert y.update_min(4)
    # brute force: drop view values below 4
    assert x.values() == [w for w in range(0, 5) if 2 * w + 1 >= 4] == [2, 3, 4]
    assert y.update_max(8)
    assert x.values() == [2, 3]
    assert not y.update_max(4) and x.values() == [2, 3]


def test_identity_and_negation(backend):
    _, x = var(backend, [0, 2, 5])
    y = shift_dview(x, 0)
    assert (y.values(), y.min(), y.max()) == ([0, 2, 5], 0, 5)
    y.remove(2)
    assert x.values() == [0, 5]
    _, b = var(backend, [0, 1])
    nb = negation_dview(b)
    assert nb.member(1) == b.member(0)
    nb.remove(1)
    assert b.values() == [1]


def test_registered_once(backend):
    _, x = var(backend, [0, 1])
    y = shift_dview(x, 1)
    x.add_view(y)
    assert x.views == [y]


def test_mode_guard(backend):
    eng = Engine(Mode.VARVIEW, backend)
    with pytest.raises(ValueError):
        shift_dview(eng.int_var(0, 1), 1)


def test_memory_shape_of_model(backend):
    eng = Engine(Mode.DOMVIEW, backend)
    xs = [eng.int_var(0, 3) for _ in range(3)]
    views = [affine_dview(x, 2, k) for k, x in enumerate(xs)]
    direct = LinearEq(xs[:1], 1)
    eng.post(direct)
    eng.post(LinearEq(views, 9))
    assert xs[0].sc == [direct] and xs[1].sc == [] and xs[2].sc == []
    assert all(x.scv == [] for x in xs)


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_bound_updates_match_brute_force(seed):
    rng = random.Random(seed)
    layers = random_fns(rng, rng.randint(1, 3))
    psi = chain(layers)
    vals = sorted(rng.sample(range(-4, 6), rng.randint(1, 7)))
    images = sorted(psi(w) for w in vals)
    v = rng.randint(images[0] - 3, images[-1] + 3)
    for op in ("update_min", "update_max"):
        eng = Engine(Mode.DOMVIEW)
        x = eng.int_var(None, values=vals)
        y = build_stack(eng, x, layers)
        keep = [w for w in vals if (psi(w) >= v if op == "update_min" else psi(w) <= v)]
        ok = getattr(y, op)(v)
        assert ok == bool(keep)
        assert x.values() == (keep if keep else vals)
