"""Compositional matrix semantics of structural isomorphisms.

Single-object semantics: every A-leaf denotes the object V of the bundled
representation data, the M-leaf denotes the module object.  The strand
state recorded in an object's signature twists the elementary matrices:
a braiding of strands in states (e, f) acts by flip . (T^e (x) T^f) R
(T^e (x) T^f)^-1, the pole winding of a strand in state e by
(1 (x) T^e) K (1 (x) T^e)^-1, and the double-involution retyping t by the
balancing, extended to tensor factors through the ribbon rule
theta_{X (x) Y} = sigma_{Y,X} (theta_Y (x) theta_X) sigma_{X,Y}.  All the
purely structural generators are identity reindexings.  Morphisms are
normalised first so braidings act one strand at a time.
"""

from __future__ import annotations

from ..dsl.morphisms import (
    ActMor,
    Gen,
    Horiz,
    Id,
    Inv,
    MorExpr,
    PhiMor,
    TensorMor,
    Vert,
    domain,
    expand_horiz,
)
from ..dsl.normalize import normalize_presentation
from ..dsl.objects import (
    ALeaf,
    Act,
    AUnit,
    MLeaf,
    MUnit,
    ObjectExpr,
    Phi,
    Tensor,
    obj_text,
    signature,
)
from ..errors import TypingError, UnsupportedGeneratorError
from .qmatrix import QMatrix
from .repdata import RepData


def _check_assignment(assignment) -> None:
    if assignment is None:
        return
    for leaf, target in assignment.items():
        if leaf == "M":
            if target != "M":
                raise TypingError("the module leaf must be assigned the module object M")
        elif target != "V":
            raise TypingError(f"single-object semantics: leaf {leaf} must be assigned V")


class _Evaluator:
    def __init__(self, data: RepData):
        self.data = data
        self._theta_leaf: QMatrix | None = None

    # -- objects -----------------------------------------------------------
    def dim(self, o: ObjectExpr) -> int:
        if isinstance(o, ALeaf):
            return self.data.d
        if isinstance(o, AUnit):
            return 1
        if isinstance(o, MLeaf):
            return self.data.m
        if isinstance(o, MUnit):
            raise UnsupportedGeneratorError("the module pointing has no matrix semantics")
        if isinstance(o, Tensor):
            return self.dim(o.left) * self.dim(o.right)
        if isinstance(o, Act):
            return self.dim(o.module) * self.dim(o.algebra)
        if isinstance(o, Phi):
            return self.dim(o.child)
        raise TypingError(f"unknown object node {o!r}")

    def _single_state(self, o: ObjectExpr) -> int:
        strands = signature(o).strands
        if len(strands) != 1:
            raise TypingError(f"expected a single-strand object, got {obj_text(o)}")
        return strands[0][1]

    # -- elementary matrices -------------------------------------------------
    def braiding_matrix(self, e: int, f: int) -> QMatrix:
        d = self.data.d
        te = self.data.T if e % 2 else QMatrix.identity(d)
        tf = self.data.T if f % 2 else QMatrix.identity(d)
        twist = te.kron(tf)
        return QMatrix.flip(d, d) * twist * self.data.R * twist.inverse()

    def kappa_matrix(self, e: int) -> QMatrix:
        d, m = self.data.d, self.data.m
        te = self.data.T if e % 2 else QMatrix.identity(d)
        twist = QMatrix.identity(m).kron(te)
        return twist * self.data.K * twist.inverse()

    def theta(self, o: ObjectExpr) -> QMatrix:
        """Balancing component at an A-typed object, by the ribbon rule."""
        if isinstance(o, AUnit):
            return QMatrix.identity(1)
        if isinstance(o, Phi):
            return self.theta(o.child)
        if isinstance(o, ALeaf):
            if self._theta_leaf is None:
                if self.data.balancing is not None:
                    self._theta_leaf = self.data.balancing
                elif (self.data.T * self.data.T).is_identity:
                    self._theta_leaf = QMatrix.identity(self.data.d)
                else:
                    raise UnsupportedGeneratorError(
                        "t requested but no balancing supplied and T^2 is not the identity"
                    )
            return self._theta_leaf
        if isinstance(o, Tensor):
            x, y = o.left, o.right
            s_xy = self.eval(Gen("sigma", (x, y)))
            s_yx = self.eval(Gen("sigma", (y, x)))
            return s_yx * self.theta(y).kron(self.theta(x)) * s_xy
        raise TypingError(f"balancing at a non-A-typed object {obj_text(o)}")

    # -- morphisms -----------------------------------------------------------
    def eval(self, f: MorExpr) -> QMatrix:
        f = normalize_presentation(f)
        return self._eval(f)

    def _eval(self, f: MorExpr) -> QMatrix:
        if isinstance(f, Id):
            return QMatrix.identity(self.dim(f.obj))
        if isinstance(f, Gen):
            return self._eval_gen(f)
        if isinstance(f, Inv):
            return self._eval(f.inner).inverse()
        if isinstance(f, Vert):
            return self._eval(f.after) * self._eval(f.before)
        if isinstance(f, TensorMor):
            return self._eval(f.left).kron(self._eval(f.right))
        if isinstance(f, ActMor):
            return self._eval(f.module).kron(self._eval(f.algebra))
        if isinstance(f, PhiMor):
            # The involution twists actions, not underlying linear maps.
            return self._eval(f.inner)
        if isinstance(f, Horiz):
            return self._eval(expand_horiz(f))
        raise TypingError(f"unknown morphism node {f!r}")

    def _eval_gen(self, f: Gen) -> QMatrix:
        name = f.name
        if name in ("alpha", "lambda", "rho", "a", "r", "phi0"):
            return QMatrix.identity(self.dim(domain(f)))
        if name == "sigma":
            x, y = f.params
            return self.braiding_matrix(self._single_state(x), self._single_state(y))
        if name == "kappa":
            m, x = f.params
            if isinstance(m, MUnit):
                raise UnsupportedGeneratorError("the module pointing has no K-matrix")
            if not isinstance(m, MLeaf):
                raise TypingError("normalisation should have peeled the module argument")
            return self.kappa_matrix(self._single_state(x))
        if name == "phi2":
            x, y = f.params
            return self.eval(Gen("sigma", (Phi(x), Phi(y))))
        if name == "t":
            return self.theta(f.params[0])
        raise TypingError(f"unknown generator {name!r}")


def eval_mor(data: RepData, f: MorExpr, assignment=None) -> QMatrix:
    """Matrix of a structural isomorphism on the bundled (V, M) data."""
    _check_assignment(assignment)
    return _Evaluator(data).eval(f)
