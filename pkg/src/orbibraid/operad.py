"""Connected components of the two-colored orbifold disk operation spaces.

An operation with d two-sided disk inputs is classified, up to isotopy, by
a tuple eps in {0,1}^d saying which half of the target each disk's marked
half lands in, together with the permutation ranking the disks by their
canonical representatives (nearest the pole first when the target has a
pole, left to right otherwise).  This module implements that discrete
shadow: enumeration, the composition law, the symbolic functor attached to
a class, and a one-dimensional interval model that serves as an
independent geometric oracle for the composition law.

Composition conventions.  ``compose(g, fs, outer_perm)`` plugs ``fs[j]``
into input ``outer_perm[j]`` of ``g``.  Signs add mod 2 through a slot;
blocks are ranked lexicographically (slot rank first, then the inner rank,
reversed when the slot itself is mirrored).  When the output has a pole,
the pole-adjacent (module) input is always stored first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import ArityError, GeometryError, TypingError


class Color(Enum):
    D = "D"
    DSTAR = "Dstar"

    def __str__(self) -> str:
        return self.value


def parse_color(text: str) -> Color:
    for c in Color:
        if c.value == text:
            return c
    raise TypingError(f"unknown color {text!r}")


Perm = tuple[int, ...]


def _inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


@dataclass(frozen=True)
class SignedOp:
    """pi_0 class of an operation: colors, sign tuple, and ranking permutation.

    ``eps`` and ``perm`` are indexed over the D inputs only (the module
    input, when present, carries no sign).  ``perm[r]`` is the D input
    occupying rank r.
    """

    inputs: tuple[Color, ...]
    output: Color
    eps: tuple[int, ...]
    perm: Perm

    def __post_init__(self):
        stars = [i for i, c in enumerate(self.inputs) if c is Color.DSTAR]
        if self.output is Color.D and stars:
            raise TypingError("no operation targets the free double disk from a pole input")
        if self.output is Color.DSTAR and len(stars) > 1:
            raise TypingError("at most one pole input is allowed")
        if stars and stars != [0]:
            raise TypingError("the pole input must come first in the canonical order")
        d = sum(1 for c in self.inputs if c is Color.D)
        if len(self.eps) != d or len(self.perm) != d:
            raise TypingError("eps and perm must be indexed by the D inputs")
        if any(e not in (0, 1) for e in self.eps):
            raise TypingError("eps entries must be 0 or 1")
        if sorted(self.perm) != list(range(d)):
            raise TypingError("perm is not a permutation")

    @property
    def arity(self) -> int:
        return len(self.inputs)

    @property
    def d_arity(self) -> int:
        return len(self.eps)

    @property
    def has_module_input(self) -> bool:
        return bool(self.inputs) and self.inputs[0] is Color.DSTAR

    def d_positions(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.inputs) if c is Color.D)

    def to_text(self) -> str:
        ins = ",".join(str(c) for c in self.inputs)
        bits = "".join(str(e) for e in self.eps)
        perm = " ".join(str(v + 1) for v in self.perm)
        return f"op {self.output} [{ins}] eps={bits} perm={perm}"


def parse_signed_op(text: str) -> SignedOp:
    try:
        head, rest = text.split("[", 1)
        colors_text, rest = rest.split("]", 1)
        words = head.split()
        if words[0] != "op":
            raise ValueError
        output = parse_color(words[1])
        inputs = tuple(parse_color(t.strip()) for t in colors_text.split(",") if t.strip())
        fields = dict()
        key = None
        for tok in rest.split():
            if "=" in tok:
                key, val = tok.split("=", 1)
                fields[key] = [val] if val else []
            elif key is not None:
                fields[key].append(tok)
        eps = tuple(int(b) for b in (fields.get("eps") or [""])[0])
        perm = tuple(int(v) - 1 for chunk in fields.get("perm", []) for v in chunk.split())
    except (ValueError, IndexError) as exc:
        raise TypingError(f"cannot parse signed operation {text!r}") from exc
    return SignedOp(inputs, output, eps, perm)


def identity_op(color: Color) -> SignedOp:
    if color is Color.D:
        return SignedOp((Color.D,), Color.D, (0,), (0,))
    return SignedOp((Color.DSTAR,), Color.DSTAR, (), ())


def classify(k: int, output: Color, input_colors) -> list[SignedOp]:
    """All 2^d d! classes with the given colors; empty when the space is empty.

    The input colors are normalised to the canonical order (module input
    first); eps and perm are unaffected by that reordering.
    """
    input_colors = tuple(input_colors)
    if k != len(input_colors):
        raise ArityError(f"arity {k} does not match {len(input_colors)} input colors")
    stars = sum(1 for c in input_colors if c is Color.DSTAR)
    if output is Color.D and stars > 0:
        return []
    if output is Color.DSTAR and stars > 1:
        return []
    canonical = tuple(sorted(input_colors, key=lambda c: c is Color.D))
    d = k - stars
    out = []
    for eps in itertools.product((0, 1), repeat=d):
        for perm in itertools.permutations(range(d)):
            out.append(SignedOp(canonical, output, eps, perm))
    return out


def compose(g: SignedOp, fs, outer_perm: Perm | None = None) -> SignedOp:
    """Class of g . (outer_perm . (f_1 u ... u f_m)); fs[j] feeds input outer_perm[j]."""
    fs = tuple(fs)
    m = g.arity
    if len(fs) != m:
        raise ArityError(f"{g.arity}-ary operation composed with {len(fs)} arguments")
    if outer_perm is None:
        outer_perm = tuple(range(m))
    if sorted(outer_perm) != list(range(m)):
        raise TypingError("outer_perm is not a permutation of the inputs")
    for j, f in enumerate(fs):
        if g.inputs[outer_perm[j]] is not f.output:
            raise TypingError(
                f"input {outer_perm[j]} of the outer operation expects {g.inputs[outer_perm[j]]},"
                f" got an operation with output {f.output}"
            )
    if g.has_module_input and outer_perm[0] != 0:
        raise TypingError("the module argument must be plugged into the module slot first")

    inputs = tuple(c for f in fs for c in f.inputs)
    d_offsets = []
    acc = 0
    for f in fs:
        d_offsets.append(acc)
        acc += f.d_arity

    # Sign of the slot each f lands in (module slot is orientation preserving).
    g_d_positions = g.d_positions()
    slot_sign = {}
    for local, pos in enumerate(g_d_positions):
        slot_sign[pos] = g.eps[local]

    eps = []
    for j, f in enumerate(fs):
        s = slot_sign.get(outer_perm[j], 0)
        eps.extend((e + s) % 2 for e in f.eps)

    outer_inv = _inverse(outer_perm)
    ranked: list[int] = []
    if g.has_module_input:
        f0 = fs[0]
        ranked.extend(d_offsets[0] + local for local in f0.perm)
    for rho in range(g.d_arity):
        local = g.perm[rho]
        slot = g_d_positions[local]
        j = outer_inv[slot]
        block = list(fs[j].perm)
        if g.eps[local] == 1:
            block.reverse()
        ranked.extend(d_offsets[j] + b for b in block)

    return SignedOp(inputs, g.output, tuple(eps), tuple(ranked))


# ---------------------------------------------------------------------------
# Symbolic functor of a class (leafwise involution, permutation, fold).


@dataclass(frozen=True)
class FunctorExpr:
    """Three-stage functor: leafwise Phi powers, a permutation, then a fold.

    fold is "tensor" for operations into the double disk (iterated tensor
    product, the unit object when nullary), "point" when a poleless
    operation lands at the pole (tensor then act on the pointing), and
    "act" when a module input is present (module action on the folded
    tensor factor).
    """

    phi_powers: tuple[int, ...]
    perm: Perm
    fold: str

    def describe(self) -> str:
        k = len(self.phi_powers)
        stages = []
        if any(self.phi_powers):
            stages.append(" (x) ".join(f"Phi^{e}" if e else "id" for e in self.phi_powers))
        if self.perm != tuple(range(k)):
            stages.append("perm[" + " ".join(str(v + 1) for v in self.perm) + "]")
        fold = f"tensor_{k}" if k != 0 else "unit"
        if self.fold == "point":
            fold = f"act(point, {fold})"
        elif self.fold == "act":
            fold = f"act . (id_M (x) {fold})"
        stages.append(fold)
        return " . ".join(reversed(stages))


def realize_functor(op: SignedOp) -> FunctorExpr:
    if op.output is Color.D:
        fold = "tensor"
    elif op.has_module_input:
        fold = "act"
    else:
        fold = "point"
    return FunctorExpr(op.eps, op.perm, fold)


def functor_to_op(fe: FunctorExpr) -> SignedOp:
    """Inverse of realize_functor; recovers the class from its functor."""
    d = len(fe.phi_powers)
    if fe.fold == "tensor":
        return SignedOp((Color.D,) * d, Color.D, fe.phi_powers, fe.perm)
    if fe.fold == "point":
        return SignedOp((Color.D,) * d, Color.DSTAR, fe.phi_powers, fe.perm)
    return SignedOp((Color.DSTAR,) + (Color.D,) * d, Color.DSTAR, fe.phi_powers, fe.perm)


# ---------------------------------------------------------------------------
# One-dimensional interval model: the geometric oracle.


@dataclass(frozen=True)
class Interval:
    """Marked-half image of one disk input: a closed subinterval of (-1, 1).

    ``copy`` is "b" or "r" when the target is the free double disk, None
    when the target is the pole disk (there the sign of the center plays
    that role).
    """

    center: Fraction
    radius: Fraction
    copy: str | None = None


@dataclass(frozen=True)
class IntervalConfig:
    """A concrete equivariant rectilinear embedding in dimension one."""

    target: Color
    intervals: tuple[Interval, ...]
    module_radius: Fraction | None = None


def _rep_center(target: Color, iv: Interval) -> Fraction:
    if target is Color.D:
        return iv.center if iv.copy == "b" else -iv.center
    return iv.center if iv.center > 0 else -iv.center


def _validate_config(cfg: IntervalConfig) -> None:
    if cfg.target is Color.D and cfg.module_radius is not None:
        raise GeometryError("the free double disk has no pole input")
    if cfg.module_radius is not None and not 0 < cfg.module_radius < 1:
        raise GeometryError("module radius out of range")
    reps = []
    for iv in cfg.intervals:
        if iv.radius <= 0:
            raise GeometryError("intervals must have positive radius")
        if cfg.target is Color.D:
            if iv.copy not in ("b", "r"):
                raise GeometryError("disks in the double disk must be tagged b or r")
        else:
            if iv.copy is not None:
                raise GeometryError("pole-disk intervals carry no copy tag")
            if abs(iv.center) <= iv.radius:
                raise GeometryError("interval overlaps the pole or its own mirror image")
        if abs(iv.center) + iv.radius >= 1:
            raise GeometryError("interval leaves the unit disk")
        rc = _rep_center(cfg.target, iv)
        reps.append((rc - iv.radius, rc + iv.radius))
        if cfg.target is Color.DSTAR and cfg.module_radius is not None:
            if rc - iv.radius <= cfg.module_radius:
                raise GeometryError("interval overlaps the pole-disk image")
    reps.sort()
    for (lo1, hi1), (lo2, hi2) in zip(reps, reps[1:]):
        if hi1 >= lo2:
            raise GeometryError("equivariant images overlap")


def brute_force_classify_1d(cfg: IntervalConfig) -> SignedOp:
    """Read (eps, perm) off a concrete embedding; the oracle for compose."""
    _validate_config(cfg)
    eps = []
    reps = []
    for iv in cfg.intervals:
        if cfg.target is Color.D:
            eps.append(0 if iv.copy == "b" else 1)
        else:
            eps.append(0 if iv.center > 0 else 1)
        reps.append(_rep_center(cfg.target, iv))
    perm = tuple(sorted(range(len(reps)), key=lambda i: reps[i]))
    inputs: tuple[Color, ...] = (Color.D,) * len(cfg.intervals)
    if cfg.module_radius is not None:
        inputs = (Color.DSTAR,) + inputs
    return SignedOp(inputs, cfg.target, tuple(eps), perm)


def realize_intervals(op: SignedOp) -> IntervalConfig:
    """A concrete embedding in the class of ``op`` (canonical representative)."""
    k = op.d_arity
    rank_of = _inverse(op.perm) if k else ()
    intervals = []
    if op.output is Color.DSTAR:
        radius = Fraction(1, 4 * (k + 1))
        module_radius = Fraction(1, 2 * (k + 1)) if op.has_module_input else None
        for local in range(k):
            rep = Fraction(rank_of[local] + 1, k + 1)
            center = rep if op.eps[local] == 0 else -rep
            intervals.append(Interval(center, radius))
    else:
        radius = Fraction(1, 2 * (k + 1))
        module_radius = None
        for local in range(k):
            rep = Fraction(2 * (rank_of[local] + 1), k + 1) - 1
            copy = "b" if op.eps[local] == 0 else "r"
            center = rep if copy == "b" else -rep
            intervals.append(Interval(center, radius, copy))
    return IntervalConfig(op.output, tuple(intervals), module_radius)


def compose_intervals(g_cfg: IntervalConfig, fs_cfgs, outer_perm: Perm | None = None) -> IntervalConfig:
    """Geometric composition of concrete embeddings (plug disks into slots)."""
    fs_cfgs = tuple(fs_cfgs)
    slots = list(g_cfg.intervals)
    has_module_slot = g_cfg.module_radius is not None
    m = len(slots) + (1 if has_module_slot else 0)
    if len(fs_cfgs) != m:
        raise ArityError(f"{m} slots but {len(fs_cfgs)} arguments")
    if outer_perm is None:
        outer_perm = tuple(range(m))
    if has_module_slot and outer_perm[0] != 0:
        raise TypingError("the module argument must be plugged into the module slot first")

    out: list[Interval] = []
    module_radius = None
    for j, f in enumerate(fs_cfgs):
        slot_idx = outer_perm[j]
        if has_module_slot and slot_idx == 0:
            lam = g_cfg.module_radius
            if f.target is not Color.DSTAR:
                raise TypingError("module slot expects a pole-disk embedding")
            for iv in f.intervals:
                out.append(Interval(iv.center * lam, iv.radius * lam))
            if f.module_radius is not None:
                module_radius = lam * f.module_radius
            continue
        slot = slots[slot_idx - (1 if has_module_slot else 0)]
        if f.target is not Color.D:
            raise TypingError("disk slots expect double-disk embeddings")
        c, rho = slot.center, slot.radius
        for iv in f.intervals:
            center = c + rho * iv.center if iv.copy == "b" else -c + rho * iv.center
            if g_cfg.target is Color.D:
                same = slot.copy if iv.copy == "b" else ("r" if slot.copy == "b" else "b")
                out.append(Interval(center, rho * iv.radius, same))
            else:
                out.append(Interval(center, rho * iv.radius))
    return IntervalConfig(g_cfg.target, tuple(out), module_radius)
