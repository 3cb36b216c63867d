"""Shared test utilities: seeded RNG, random well-typed morphisms, word sampling."""

from __future__ import annotations

import os
import random

from orbibraid.braid import BraidWord, CylBraidWord
from orbibraid.dsl import (
    ActMor,
    ALeaf,
    Act,
    AUnit,
    Gen,
    Id,
    Inv,
    MLeaf,
    MorExpr,
    ObjectExpr,
    Phi,
    PhiMor,
    Tensor,
    TensorMor,
    Vert,
    is_module,
    strand_count,
)


def seeded_rng(salt: int = 0) -> random.Random:
    base = int(os.environ.get("ORBIBRAID_SEED", "20260810"))
    return random.Random(base + salt)


def random_braid_word(rng: random.Random, n: int, length: int) -> BraidWord:
    return BraidWord(n, tuple((rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)))


def random_cyl_word(rng: random.Random, n: int, length: int) -> CylBraidWord:
    letters = []
    for _ in range(length):
        i = rng.randint(0, n - 1) if n > 1 else 0
        letters.append((i, rng.choice((1, -1))))
    return CylBraidWord(n, tuple(letters))


# ---------------------------------------------------------------------------
# Random objects and random well-typed structural isomorphisms.


def random_a_object(rng: random.Random, labels: list[int], phi_budget: int = 2) -> ObjectExpr:
    if not labels:
        return AUnit()
    if len(labels) == 1:
        o: ObjectExpr = ALeaf(labels[0])
        if phi_budget > 0 and rng.random() < 0.3:
            o = Phi(o)
        if rng.random() < 0.1:
            o = Tensor(o, AUnit()) if rng.random() < 0.5 else Tensor(AUnit(), o)
        return o
    cut = rng.randint(1, len(labels) - 1)
    left = random_a_object(rng, labels[:cut], phi_budget)
    right = random_a_object(rng, labels[cut:], phi_budget)
    o = Tensor(left, right)
    if phi_budget > 0 and rng.random() < 0.25:
        o = Phi(o)
    return o


def random_m_object(rng: random.Random, labels: list[int]) -> ObjectExpr:
    blocks = []
    rest = list(labels)
    while rest:
        take = rng.randint(1, len(rest))
        blocks.append(rest[:take])
        rest = rest[take:]
    o: ObjectExpr = MLeaf()
    for block in blocks:
        o = Act(o, random_a_object(rng, block))
    if not blocks and rng.random() < 0.5:
        o = Act(o, AUnit())
    return o


def _size(o: ObjectExpr) -> int:
    if isinstance(o, Tensor):
        return 1 + _size(o.left) + _size(o.right)
    if isinstance(o, Act):
        return 1 + _size(o.module) + _size(o.algebra)
    if isinstance(o, Phi):
        return 1 + _size(o.child)
    return 1


def applicable_steps(obj: ObjectExpr, allow_growth: bool) -> list[tuple[MorExpr, ObjectExpr]]:
    """Basic rewriting steps with domain exactly ``obj``."""
    from orbibraid.dsl import codomain

    steps: list[tuple[MorExpr, ObjectExpr]] = []

    def emit(mor: MorExpr) -> None:
        steps.append((mor, codomain(mor)))

    if isinstance(obj, Tensor):
        l, r = obj.left, obj.right
        if isinstance(l, Tensor):
            emit(Gen("alpha", (l.left, l.right, r)))
        if isinstance(r, Tensor):
            emit(Inv(Gen("alpha", (l, r.left, r.right))))
        if isinstance(l, AUnit):
            emit(Gen("lambda", (r,)))
        if isinstance(r, AUnit):
            emit(Gen("rho", (l,)))
        emit(Gen("sigma", (l, r)))
        emit(Inv(Gen("sigma", (r, l))))
        if isinstance(l, Phi) and isinstance(r, Phi):
            emit(Gen("phi2", (l.child, r.child)))
    if isinstance(obj, Phi):
        c = obj.child
        if isinstance(c, Tensor):
            emit(Inv(Gen("phi2", (c.right, c.left))))
        if isinstance(c, Phi):
            emit(Gen("t", (c.child,)))
        if isinstance(c, AUnit):
            emit(Gen("phi0", ()))
    if isinstance(obj, AUnit):
        emit(Inv(Gen("phi0", ())))
    if isinstance(obj, Act):
        m, x = obj.module, obj.algebra
        emit(Gen("kappa", (m, x)))
        if isinstance(x, Phi):
            emit(Inv(Gen("kappa", (m, x.child))))
        if isinstance(x, Tensor):
            emit(Inv(Gen("a", (m, x.left, x.right))))
        if isinstance(x, AUnit):
            emit(Gen("r", (m,)))
        if isinstance(m, Act):
            emit(Gen("a", (m.module, m.algebra, x)))
    if allow_growth and not is_module(obj):
        emit(Inv(Gen("lambda", (obj,))))
        emit(Inv(Gen("rho", (obj,))))
        emit(Inv(Gen("t", (obj,))))
    if allow_growth and is_module(obj):
        emit(Inv(Gen("r", (obj,))))

    # Recurse into children.
    if isinstance(obj, Tensor):
        for sub, new in applicable_steps(obj.left, allow_growth):
            steps.append((TensorMor(sub, Id(obj.right)), Tensor(new, obj.right)))
        for sub, new in applicable_steps(obj.right, allow_growth):
            steps.append((TensorMor(Id(obj.left), sub), Tensor(obj.left, new)))
    if isinstance(obj, Phi):
        for sub, new in applicable_steps(obj.child, allow_growth):
            steps.append((PhiMor(sub), Phi(new)))
    if isinstance(obj, Act):
        for sub, new in applicable_steps(obj.module, allow_growth):
            steps.append((ActMor(sub, Id(obj.algebra)), Act(new, obj.algebra)))
        for sub, new in applicable_steps(obj.algebra, allow_growth):
            steps.append((ActMor(Id(obj.module), sub), Act(obj.module, new)))
    return steps


def random_mor(
    rng: random.Random,
    n_leaves: int | None = None,
    n_steps: int | None = None,
    m_typed: bool = True,
    max_leaves: int = 6,
) -> MorExpr:
    """A random well-typed structural isomorphism as a chain of basic steps."""
    if n_leaves is None:
        n_leaves = rng.randint(0, max_leaves)
    labels = list(range(1, n_leaves + 1))
    obj = random_m_object(rng, labels) if m_typed else random_a_object(rng, labels)
    if n_steps is None:
        n_steps = rng.randint(1, 8)
    mor: MorExpr = Id(obj)
    cur = obj
    for _ in range(n_steps):
        allow_growth = _size(cur) < 4 * (strand_count(cur) + 2)
        steps = applicable_steps(cur, allow_growth)
        if not steps:
            break
        step, cur = rng.choice(steps)
        mor = Vert(step, mor)
    return mor
