"""Underlying braids of structural isomorphisms and the coherence decision.

A structural isomorphism between M-typed objects has an underlying word in
the cylinder braid group on its A-strands (the module/pole is not a
strand); between A-typed objects, an ordinary braid word.  Braidings of
compound objects contribute cabled words: a sigma on blocks of sizes
(c1, c2) contributes the positive block crossing, a kappa whose argument
carries c strands contributes the doubled pole crossing, built
recursively from the one-strand winding and block crossings.  All other
generators are silent.  Vertical composition concatenates (first factor
first), inverses reverse and negate, the involution reverses strand
positions.

The decision procedure: two parallel structural isomorphisms commute in
every Z2-braided pair whenever their underlying (cylinder) braids are
equal, for Z2-monoidal pairs whenever both are braiding-free, and in
every Z2-symmetric pair whenever the underlying signed permutations
(permutation plus per-strand winding parity) agree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .braid.garside import GarsideNF, braid_eq, cyl_braid_eq, garside_nf
from .braid.words import (
    KAPPA,
    BraidWord,
    CylBraidWord,
    Letter,
    all_pole_windings,
    embed_cyl,
    word_positions,
)
from .dsl.morphisms import (
    ActMor,
    Gen,
    Horiz,
    Id,
    Inv,
    MorExpr,
    PhiMor,
    TensorMor,
    Vert,
    codomain,
    domain,
    expand_horiz,
    mentions_braiding,
)
from .dsl.objects import SignedSignature, signature, strand_count
from .errors import ArityError, FlavorError, TypingError
from .operad import Color, SignedOp

COMMUTES = "COMMUTES"
NOT_COMMUTES = "NOT_COMMUTES"
NOT_PARALLEL = "NOT_PARALLEL"


def _block_swap(offset: int, cx: int, cy: int) -> list[Letter]:
    """Positive word moving a block of cy strands over a block of cx strands.

    The blocks start at positions offset+1..offset+cx and
    offset+cx+1..offset+cx+cy.
    """
    letters: list[Letter] = []
    for p in range(1, cy + 1):
        for s in range(offset + p + cx - 1, offset + p - 1, -1):
            letters.append((s, 1))
    return letters


def _cable_kappa(ell: int, c: int) -> list[Letter]:
    """Doubled pole crossing of a c-strand block behind ell module-side strands."""
    if c == 0:
        return []
    if ell > 0:
        return _block_swap(ell - 1, 1, c) + _cable_kappa(ell - 1, c) + _block_swap(ell - 1, c, 1)
    if c == 1:
        return [(KAPPA, 1)]
    return _cable_kappa(0, c - 1) + _block_swap(0, c - 1, 1) + [(KAPPA, 1)]


def _walk(f: MorExpr, offset: int) -> list[Letter]:
    if isinstance(f, Id):
        return []
    if isinstance(f, Gen):
        if f.name == "sigma":
            x, y = f.params
            return _block_swap(offset, strand_count(x), strand_count(y))
        if f.name == "kappa":
            m, x = f.params
            assert offset == 0, "module-typed morphisms sit leftmost"
            return _cable_kappa(strand_count(m), strand_count(x))
        return []
    if isinstance(f, Inv):
        return [(i, -e) for i, e in reversed(_walk(f.inner, offset))]
    if isinstance(f, Vert):
        return _walk(f.before, offset) + _walk(f.after, offset)
    if isinstance(f, TensorMor):
        return _walk(f.left, offset) + _walk(f.right, offset + strand_count(domain(f.left)))
    if isinstance(f, ActMor):
        return _walk(f.module, offset) + _walk(f.algebra, offset + strand_count(domain(f.module)))
    if isinstance(f, PhiMor):
        c = strand_count(domain(f.inner))
        return [(offset + c - i, e) for i, e in _walk(f.inner, 0)]
    if isinstance(f, Horiz):
        return _walk(expand_horiz(f), offset)
    raise TypingError(f"unknown morphism node {f!r}")


def extract_braid(f: MorExpr) -> BraidWord | CylBraidWord:
    """Underlying braid of a presentation; cylinder word iff f is M-typed."""
    sig = signature(domain(f))
    n = max(1, len(sig.strands))
    letters = tuple(_walk(f, 0))
    if sig.module is not None:
        return CylBraidWord(n, letters)
    return BraidWord(n, letters)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a diagram check with the evidence that decided it."""

    status: str
    lhs_word: BraidWord | CylBraidWord | None = None
    rhs_word: BraidWord | CylBraidWord | None = None
    lhs_nf: GarsideNF | None = None
    rhs_nf: GarsideNF | None = None
    detail: str = ""

    def to_json_dict(self) -> dict:
        return {
            "status": self.status,
            "lhs_nf": self.lhs_nf.describe() if self.lhs_nf else None,
            "rhs_nf": self.rhs_nf.describe() if self.rhs_nf else None,
            "braid_words": {
                "lhs": self.lhs_word.to_text() if self.lhs_word is not None else None,
                "rhs": self.rhs_word.to_text() if self.rhs_word is not None else None,
            },
            "detail": self.detail,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def _signature_text(sig: SignedSignature) -> str:
    strands = " ".join(f"X{label}^{e}" for label, e in sig.strands)
    return f"[{sig.module or '-'} | {strands}]"


def check(lhs: MorExpr, rhs: MorExpr, flavor: str) -> Verdict:
    """Decide whether the diagram lhs = rhs commutes under the given flavor."""
    if flavor not in ("monoidal", "braided", "symmetric"):
        raise FlavorError(f"unknown flavor {flavor!r}")
    sig_dom_l = signature(domain(lhs))
    sig_dom_r = signature(domain(rhs))
    sig_cod_l = signature(codomain(lhs))
    sig_cod_r = signature(codomain(rhs))
    if sig_dom_l != sig_dom_r or sig_cod_l != sig_cod_r:
        return Verdict(
            NOT_PARALLEL,
            detail=(
                f"domains {_signature_text(sig_dom_l)} vs {_signature_text(sig_dom_r)}; "
                f"codomains {_signature_text(sig_cod_l)} vs {_signature_text(sig_cod_r)}"
            ),
        )
    if flavor == "monoidal":
        if mentions_braiding(lhs) or mentions_braiding(rhs):
            raise FlavorError("a monoidal-flavor diagram mentions sigma or kappa")
        return Verdict(COMMUTES, detail="parallel braiding-free structural isomorphisms")

    wl = extract_braid(lhs)
    wr = extract_braid(rhs)
    cylinder = isinstance(wl, CylBraidWord)
    nf_l = garside_nf(embed_cyl(wl) if cylinder else wl)
    nf_r = garside_nf(embed_cyl(wr) if cylinder else wr)
    if flavor == "braided":
        equal = cyl_braid_eq(wl, wr) if cylinder else braid_eq(wl, wr)
        return Verdict(COMMUTES if equal else NOT_COMMUTES, wl, wr, nf_l, nf_r)
    # symmetric: signed symmetric group invariant
    equal = word_positions(wl) == word_positions(wr)
    if cylinder:
        par_l = tuple(x % 2 for x in all_pole_windings(wl))
        par_r = tuple(x % 2 for x in all_pole_windings(wr))
        equal = equal and par_l == par_r
    return Verdict(COMMUTES if equal else NOT_COMMUTES, wl, wr, nf_l, nf_r)


def braid_of_signed_path(start: SignedOp, word: CylBraidWord | BraidWord) -> SignedOp:
    """Endpoint of the path over ``start`` determined by a (cylinder) braid.

    Each pole winding flips the sign of the strand nearest the pole, each
    crossing swaps two adjacent ranks; the result is the isotopy class at
    the far end.
    """
    if word.n != start.d_arity:
        raise ArityError(f"word on {word.n} strands cannot act on a {start.d_arity}-disk class")
    has_kappa = any(i == KAPPA for i, _ in word.letters)
    if has_kappa and start.output is not Color.DSTAR:
        raise TypingError("pole windings require an operation targeting the pole disk")
    eps = list(start.eps)
    perm = list(start.perm)
    for i, _ in word.letters:
        if i == KAPPA:
            eps[perm[0]] ^= 1
        else:
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return SignedOp(start.inputs, start.output, tuple(eps), tuple(perm))
