"""Mode-aware view constructors used by the benchmark models.

The same call produces, depending on the engine mode:

* NOVIEW: an auxiliary variable plus a channeling constraint (flattening);
* VARVIEW: a variable view for injective functions.  Non-injective views are
  not available as variable views, so literals and residues are flattened
  like in NOVIEW;
* DOMVIEW: a domain view (injective or not).
"""

from __future__ import annotations

from .constraints import AffineChannel, FnChannel, ReifEqChannel
from .domain_views import DomainView
from .kernel import Mode
from .noninjective import LiteralView, ModuloView
from .variable_views import VariableView
from .variables import VarRef
from .viewfns import Affine, InjectiveFn, Modulo, Shift


def _injective(x: VarRef, fn: InjectiveFn, name=None) -> VarRef:
    eng = x.engine
    if eng.mode is Mode.VARVIEW:
        return VariableView(x, fn, name)
    if eng.mode is Mode.DOMVIEW:
        return DomainView(x, fn, name)
    y = eng.int_var(None, values=[fn.forward(w) for w in x.values()], name=name)
    eng.post(AffineChannel(x, y, fn))
    return y


def shift(x: VarRef, k: int, name=None) -> VarRef:
    """``x + k``."""
    return _injective(x, Shift(k), name)


def affine(x: VarRef, a: int, b: int = 0, name=None) -> VarRef:
    """``a*x + b`` with ``a != 0``."""
    return _injective(x, Affine(a, b), name)


def negation(x: VarRef, name=None) -> VarRef:
    """``1 - x`` over a 0/1 variable."""
    return _injective(x, Affine(-1, 1), name)


def literal(x: VarRef, i: int, name=None) -> VarRef:
    """The 0/1 truth value of ``x == i``."""
    eng = x.engine
    if eng.mode is Mode.DOMVIEW:
        return LiteralView(x, i, name)
    b = eng.int_var(0, 1, name=name)
    eng.post(ReifEqChannel(x, i, b))
    return b


def modulo(x: VarRef, k: int, name=None) -> VarRef:
    """``x mod k`` (floor residue)."""
    eng = x.engine
    if eng.mode is Mode.DOMVIEW:
        return ModuloView(x, k, name)
    fn = Modulo(k)
    y = eng.int_var(None, values=[fn.forward(w) for w in x.values()], name=name)
    eng.post(FnChannel(x, y, fn))
    return y
