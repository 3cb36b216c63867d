"""Left-greedy Garside normal form for B_n and the word problem it decides.

A braid is written Delta^p x_1 ... x_l where Delta is the positive half
twist and every x_j is a permutation braid (a positive braid in which each
pair of strands crosses at most once).  Permutation braids are stored as
permutations of {0, ..., n-1} in one-line notation mapping start position
to end position.  The factorisation is *left-weighted*: each factor
absorbs every generator that could migrate from the factor to its right,
which makes the form canonical, so two words represent the same group
element exactly when their normal forms are identical tuples.

Inverse generators are removed up front via sigma_i^-1 =
Delta^-1 (Delta sigma_i^-1), whose second factor is the permutation braid
with permutation s_i . omega; the Delta^-1 is pushed to the far left
through the factors collected so far (conjugation by Delta flips
generator indices i -> n-i).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ArityError
from .words import BraidWord, CylBraidWord, embed_cyl

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def omega_perm(n: int) -> Perm:
    """Permutation of the half twist Delta: full order reversal."""
    return tuple(range(n - 1, -1, -1))


def chain_perm(p: Perm, q: Perm) -> Perm:
    """The permutation 'p then q' on positions."""
    return tuple(q[x] for x in p)


def inverse_perm(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def flip_perm(p: Perm) -> Perm:
    """Conjugation by Delta: omega . p . omega."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - i] for i in range(n))


def _swap_values(p: Perm, j: int) -> Perm:
    q = list(p)
    for x in range(len(q)):
        if q[x] == j:
            q[x] = j + 1
        elif q[x] == j + 1:
            q[x] = j
    return tuple(q)


def _swap_entries(p: Perm, j: int) -> Perm:
    q = list(p)
    q[j], q[j + 1] = q[j + 1], q[j]
    return tuple(q)


def starting_set(p: Perm) -> set[int]:
    """Indices j such that sigma_{j+1} is a left divisor of the permutation braid."""
    return {j for j in range(len(p) - 1) if p[j] > p[j + 1]}


def finishing_set(p: Perm) -> set[int]:
    """Indices j such that sigma_{j+1} is a right divisor of the permutation braid."""
    return starting_set(inverse_perm(p))


def perm_to_letters(p: Perm) -> tuple[tuple[int, int], ...]:
    """A minimal positive word for a permutation braid (letters 1-based)."""
    letters = []
    q = p
    while True:
        for j in range(len(q) - 1):
            if q[j] > q[j + 1]:
                letters.append((j + 1, 1))
                q = _swap_entries(q, j)
                break
        else:
            return tuple(letters)


def _weight_pair(a: Perm, b: Perm) -> tuple[Perm, Perm, bool]:
    """Move every left divisor of b that a can absorb, per left-weightedness."""
    changed = False
    while True:
        movable = starting_set(b) - finishing_set(a)
        if not movable:
            return a, b, changed
        j = min(movable)
        a = _swap_values(a, j)
        b = _swap_entries(b, j)
        changed = True


def _left_weight(n: int, factors: list[Perm]) -> tuple[int, tuple[Perm, ...]]:
    ident = identity_perm(n)
    omega = omega_perm(n)
    while True:
        factors = [f for f in factors if f != ident]
        changed = False
        for idx in range(len(factors) - 1):
            a, b, moved = _weight_pair(factors[idx], factors[idx + 1])
            if moved:
                factors[idx], factors[idx + 1] = a, b
                changed = True
        if not changed:
            break
    factors = [f for f in factors if f != ident]
    power = 0
    while factors and factors[0] == omega:
        power += 1
        factors.pop(0)
    return power, tuple(factors)


@dataclass(frozen=True)
class GarsideNF:
    """Canonical form Delta^power x_1 ... x_l of an element of B_n.

    Factors are permutation braids given by their permutations; none is the
    identity or Delta, and consecutive factors are left-weighted.
    """

    n: int
    power: int
    factors: tuple[Perm, ...]

    def __post_init__(self):
        ident = identity_perm(self.n)
        omega = omega_perm(self.n)
        for f in self.factors:
            assert f != ident and f != omega, "factor must be a proper permutation braid"
        for a, b in zip(self.factors, self.factors[1:]):
            assert starting_set(b) <= finishing_set(a), "factors not left-weighted"

    @property
    def is_trivial(self) -> bool:
        return self.power == 0 and not self.factors

    def to_word(self) -> BraidWord:
        """Rebuild a braid word (Delta^power, then the factors)."""
        delta = perm_to_letters(omega_perm(self.n))
        letters: list[tuple[int, int]] = []
        if self.power >= 0:
            letters.extend(delta * self.power)
        else:
            delta_inv = tuple((i, -e) for i, e in reversed(delta))
            letters.extend(delta_inv * (-self.power))
        for f in self.factors:
            letters.extend(perm_to_letters(f))
        return BraidWord(self.n, tuple(letters))

    def describe(self) -> str:
        facs = " ".join("(" + " ".join(str(v + 1) for v in f) + ")" for f in self.factors)
        return f"Delta^{self.power} {facs}".strip()


def garside_nf(w: BraidWord) -> GarsideNF:
    """Left-greedy normal form; nf(u) == nf(v) iff u = v in B_n."""
    n = w.n
    omega = omega_perm(n)
    power = 0
    factors: list[Perm] = []
    for i, e in w.letters:
        j = i - 1
        if e == 1:
            factors.append(_swap_entries(identity_perm(n), j))
        else:
            power -= 1
            factors = [flip_perm(f) for f in factors]
            factors.append(_swap_values(omega, j))
    extra, weighted = _left_weight(n, factors)
    return GarsideNF(n, power + extra, weighted)


def braid_eq(u: BraidWord, v: BraidWord) -> bool:
    """Decide u = v in B_n via triviality of nf(u^-1 v)."""
    if u.n != v.n:
        raise ArityError(f"words live on {u.n} and {v.n} strands")
    return garside_nf(u.inverse() * v).is_trivial


def cyl_braid_eq(u: CylBraidWord, v: CylBraidWord) -> bool:
    """Decide u = v in B^cyl_n through the annular embedding into B_{n+1}."""
    if u.n != v.n:
        raise ArityError(f"words live on {u.n} and {v.n} strands")
    return braid_eq(embed_cyl(u), embed_cyl(v))
