"""Structural isomorphisms as syntax trees, with domain/codomain typing.

Generator leaves are instantiated at explicit object parameters; vertical
composition demands syntactic equality at the seam (users insert explicit
associators).  Horizontal composition ``Horiz(outer, inners)`` whiskers
morphisms into the parameter slots of a generator instance; it is sugar
and expands to a Vert of the re-instantiated generator with the functor
image of the inners.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import TypingError
from .objects import Act, AUnit, ObjectExpr, Phi, Tensor, is_module, obj_text


class MorExpr:
    pass


@dataclass(frozen=True)
class Id(MorExpr):
    obj: ObjectExpr


@dataclass(frozen=True)
class Gen(MorExpr):
    name: str
    params: tuple[ObjectExpr, ...]


@dataclass(frozen=True)
class Inv(MorExpr):
    inner: MorExpr


@dataclass(frozen=True)
class Vert(MorExpr):
    after: MorExpr
    before: MorExpr  # applied first


@dataclass(frozen=True)
class TensorMor(MorExpr):
    left: MorExpr
    right: MorExpr


@dataclass(frozen=True)
class ActMor(MorExpr):
    module: MorExpr
    algebra: MorExpr


@dataclass(frozen=True)
class PhiMor(MorExpr):
    inner: MorExpr


@dataclass(frozen=True)
class Horiz(MorExpr):
    outer: MorExpr
    inners: tuple[MorExpr, ...]


# Parameter sorts and domain/codomain shapes of the generators.
GEN_PARAM_KINDS: dict[str, tuple[str, ...]] = {
    "alpha": ("A", "A", "A"),
    "lambda": ("A",),
    "rho": ("A",),
    "a": ("M", "A", "A"),
    "r": ("M",),
    "sigma": ("A", "A"),
    "kappa": ("M", "A"),
    "phi2": ("A", "A"),
    "phi0": (),
    "t": ("A",),
}

BRAID_SILENT_GENERATORS = frozenset({"alpha", "lambda", "rho", "a", "r", "phi2", "phi0", "t"})


def gen_domain(name: str, p: tuple[ObjectExpr, ...]) -> ObjectExpr:
    if name == "alpha":
        return Tensor(Tensor(p[0], p[1]), p[2])
    if name == "lambda":
        return Tensor(AUnit(), p[0])
    if name == "rho":
        return Tensor(p[0], AUnit())
    if name == "a":
        return Act(Act(p[0], p[1]), p[2])
    if name == "r":
        return Act(p[0], AUnit())
    if name == "sigma":
        return Tensor(p[0], p[1])
    if name == "kappa":
        return Act(p[0], p[1])
    if name == "phi2":
        return Tensor(Phi(p[0]), Phi(p[1]))
    if name == "phi0":
        return Phi(AUnit())
    if name == "t":
        return Phi(Phi(p[0]))
    raise TypingError(f"unknown generator {name!r}")


def gen_codomain(name: str, p: tuple[ObjectExpr, ...]) -> ObjectExpr:
    if name == "alpha":
        return Tensor(p[0], Tensor(p[1], p[2]))
    if name == "lambda" or name == "rho" or name == "t":
        return p[0]
    if name == "a":
        return Act(p[0], Tensor(p[1], p[2]))
    if name == "r":
        return p[0]
    if name == "sigma":
        return Tensor(p[1], p[0])
    if name == "kappa":
        return Act(p[0], Phi(p[1]))
    if name == "phi2":
        return Phi(Tensor(p[1], p[0]))
    if name == "phi0":
        return AUnit()
    raise TypingError(f"unknown generator {name!r}")


def _gen_functor_image(name: str, inners: tuple[MorExpr, ...], side: str) -> MorExpr:
    """The domain- or codomain-functor of a generator applied to morphisms."""
    if name == "alpha":
        if side == "dom":
            return TensorMor(TensorMor(inners[0], inners[1]), inners[2])
        return TensorMor(inners[0], TensorMor(inners[1], inners[2]))
    if name == "lambda":
        return TensorMor(Id(AUnit()), inners[0]) if side == "dom" else inners[0]
    if name == "rho":
        return TensorMor(inners[0], Id(AUnit())) if side == "dom" else inners[0]
    if name == "a":
        if side == "dom":
            return ActMor(ActMor(inners[0], inners[1]), inners[2])
        return ActMor(inners[0], TensorMor(inners[1], inners[2]))
    if name == "r":
        return ActMor(inners[0], Id(AUnit())) if side == "dom" else inners[0]
    if name == "sigma":
        if side == "dom":
            return TensorMor(inners[0], inners[1])
        return TensorMor(inners[1], inners[0])
    if name == "kappa":
        if side == "dom":
            return ActMor(inners[0], inners[1])
        return ActMor(inners[0], PhiMor(inners[1]))
    if name == "phi2":
        if side == "dom":
            return TensorMor(PhiMor(inners[0]), PhiMor(inners[1]))
        return PhiMor(TensorMor(inners[1], inners[0]))
    if name == "t":
        return PhiMor(PhiMor(inners[0])) if side == "dom" else inners[0]
    raise TypingError(f"generator {name!r} admits no horizontal composition")


def _check_gen(name: str, params: tuple[ObjectExpr, ...]) -> None:
    kinds = GEN_PARAM_KINDS.get(name)
    if kinds is None:
        raise TypingError(f"unknown generator {name!r}")
    if len(params) != len(kinds):
        raise TypingError(f"{name} expects {len(kinds)} parameters, got {len(params)}")
    for kind, p in zip(kinds, params):
        if (kind == "M") != is_module(p):
            raise TypingError(f"{name} parameter {obj_text(p)} has the wrong sort")


def expand_horiz(h: Horiz) -> MorExpr:
    cached = getattr(h, "_expand_cache", None)
    if cached is not None:
        return cached
    out = _expand_horiz(h)
    object.__setattr__(h, "_expand_cache", out)
    return out


def _expand_horiz(h: Horiz) -> MorExpr:
    outer = h.outer
    if isinstance(outer, Id):
        if len(h.inners) != 1:
            raise TypingError("identity whiskering takes exactly one inner morphism")
        inner = h.inners[0]
        if domain(inner) != outer.obj:
            raise TypingError(
                f"inner morphism starts at {obj_text(domain(inner))}, slot is {obj_text(outer.obj)}"
            )
        return inner
    inverted = False
    if isinstance(outer, Inv) and isinstance(outer.inner, Gen):
        inverted = True
        outer = outer.inner
    if not isinstance(outer, Gen):
        raise TypingError("the outer morphism of a horizontal composition must be a generator instance")
    _check_gen(outer.name, outer.params)
    if len(h.inners) != len(outer.params):
        raise TypingError(f"{outer.name} has {len(outer.params)} slots, got {len(h.inners)} inner morphisms")
    for p, inner in zip(outer.params, h.inners):
        if domain(inner) != p:
            raise TypingError(
                f"inner morphism starts at {obj_text(domain(inner))}, slot is {obj_text(p)}"
            )
    new_params = tuple(codomain(inner) for inner in h.inners)
    if not h.inners:
        return Inv(outer) if inverted else outer
    if inverted:
        return Vert(Inv(Gen(outer.name, new_params)), _gen_functor_image(outer.name, h.inners, "cod"))
    return Vert(Gen(outer.name, new_params), _gen_functor_image(outer.name, h.inners, "dom"))


def domain(f: MorExpr) -> ObjectExpr:
    cached = getattr(f, "_dom_cache", None)
    if cached is not None:
        return cached
    if isinstance(f, Id):
        out = f.obj
    elif isinstance(f, Gen):
        _check_gen(f.name, f.params)
        out = gen_domain(f.name, f.params)
    elif isinstance(f, Inv):
        out = codomain(f.inner)
    elif isinstance(f, Vert):
        seam = codomain(f.before)
        need = domain(f.after)
        if seam != need:
            raise TypingError(
                f"vertical seam mismatch: first factor ends at {obj_text(seam)}, "
                f"second starts at {obj_text(need)}"
            )
        out = domain(f.before)
    elif isinstance(f, TensorMor):
        out = Tensor(domain(f.left), domain(f.right))
    elif isinstance(f, ActMor):
        out = Act(domain(f.module), domain(f.algebra))
    elif isinstance(f, PhiMor):
        out = Phi(domain(f.inner))
    elif isinstance(f, Horiz):
        out = domain(expand_horiz(f))
    else:
        raise TypingError(f"unknown morphism node {f!r}")
    object.__setattr__(f, "_dom_cache", out)
    return out


def codomain(f: MorExpr) -> ObjectExpr:
    cached = getattr(f, "_cod_cache", None)
    if cached is not None:
        return cached
    if isinstance(f, Id):
        out = f.obj
    elif isinstance(f, Gen):
        _check_gen(f.name, f.params)
        out = gen_codomain(f.name, f.params)
    elif isinstance(f, Inv):
        out = domain(f.inner)
    elif isinstance(f, Vert):
        domain(f)  # seam check
        out = codomain(f.after)
    elif isinstance(f, TensorMor):
        out = Tensor(codomain(f.left), codomain(f.right))
    elif isinstance(f, ActMor):
        out = Act(codomain(f.module), codomain(f.algebra))
    elif isinstance(f, PhiMor):
        out = Phi(codomain(f.inner))
    elif isinstance(f, Horiz):
        out = codomain(expand_horiz(f))
    else:
        raise TypingError(f"unknown morphism node {f!r}")
    object.__setattr__(f, "_cod_cache", out)
    return out


def validate(f: MorExpr) -> tuple[ObjectExpr, ObjectExpr]:
    """Type-check f fully; returns (domain, codomain)."""
    return domain(f), codomain(f)


def mentions_braiding(f: MorExpr) -> bool:
    """Whether any sigma or kappa instance occurs in the presentation."""
    if isinstance(f, Gen):
        return f.name in ("sigma", "kappa")
    if isinstance(f, (Id,)):
        return False
    if isinstance(f, Inv):
        return mentions_braiding(f.inner)
    if isinstance(f, Vert):
        return mentions_braiding(f.after) or mentions_braiding(f.before)
    if isinstance(f, (TensorMor, ActMor)):
        children = (f.left, f.right) if isinstance(f, TensorMor) else (f.module, f.algebra)
        return any(mentions_braiding(c) for c in children)
    if isinstance(f, PhiMor):
        return mentions_braiding(f.inner)
    if isinstance(f, Horiz):
        return mentions_braiding(f.outer) or any(mentions_braiding(g) for g in f.inners)
    return False


def mor_text(f: MorExpr) -> str:
    if isinstance(f, Id):
        return f"id({obj_text(f.obj)})"
    if isinstance(f, Gen):
        if not f.params:
            return f"{f.name}()"
        return f"{f.name}({', '.join(obj_text(p) for p in f.params)})"
    if isinstance(f, Inv):
        return f"inv({mor_text(f.inner)})"
    if isinstance(f, Vert):
        return f"vert({mor_text(f.after)}, {mor_text(f.before)})"
    if isinstance(f, TensorMor):
        return f"tens({mor_text(f.left)}, {mor_text(f.right)})"
    if isinstance(f, ActMor):
        return f"act({mor_text(f.module)}, {mor_text(f.algebra)})"
    if isinstance(f, PhiMor):
        return f"phi({mor_text(f.inner)})"
    if isinstance(f, Horiz):
        inners = ", ".join(mor_text(g) for g in f.inners)
        return f"horiz({mor_text(f.outer)}; {inners})"
    raise TypingError(f"unknown morphism node {f!r}")
