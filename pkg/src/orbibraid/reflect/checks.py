"""Matrix-level verification: Yang-Baxter, (twisted) reflection, cylinder reps.

Leg conventions: tensor factors are ordered M (x) V_1 (x) ... (x) V_n;
numeric subscripts refer to the V legs.  K_1 acts on M (x) V_1; K_2 is
K_1 conjugated through the flip of V_1 and V_2.  R_21 is R conjugated by
the flip.  The braiding operator is Rhat = flip . R, so words in the
cylinder braid group act by genuine matrix products, with the pole
winding represented by the T-straightened K-action (1 (x) T^-1) K on the
M (x) V_1 legs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import DimensionError, RelationError
from .qmatrix import QMatrix
from .repdata import RepData
from ..braid.words import KAPPA, BraidWord, CylBraidWord


def _isqrt_exact(n: int) -> int:
    r = math.isqrt(n)
    if r * r != n:
        raise DimensionError(f"matrix of size {n} is not a square tensor power")
    return r


def yang_baxter_check(R: QMatrix) -> bool:
    """Whether R_12 R_13 R_23 = R_23 R_13 R_12 on V (x) V (x) V, exactly."""
    if R.rows != R.cols:
        raise DimensionError("R must be square")
    d = _isqrt_exact(R.rows)
    eye = QMatrix.identity(d)
    flip23 = eye.kron(QMatrix.flip(d, d))
    r12 = R.kron(eye)
    r23 = eye.kron(R)
    r13 = flip23 * r12 * flip23
    return r12 * r13 * r23 == r23 * r13 * r12


def _legs(data: RepData):
    d, m = data.d, data.m
    eye_d = QMatrix.identity(d)
    eye_m = QMatrix.identity(m)
    p = eye_m.kron(QMatrix.flip(d, d))  # swap V_1 V_2 over M
    k1 = data.K.kron(eye_d)
    k2 = p * k1 * p
    r12 = eye_m.kron(data.R)
    rphi12 = eye_m.kron(data.Rphi)
    rphi21 = p * rphi12 * p
    rphiphi21 = p * eye_m.kron(data.Rphiphi) * p
    return k1, k2, r12, rphi12, rphi21, rphiphi21


def reflection_check(data: RepData) -> bool:
    """The phi-twisted reflection equation K1 R21^phi K2 R12 = R21^{phi,phi} K2 R12^phi K1.

    With Rphi = Rphiphi = R and T the identity this is the untwisted
    reflection equation.
    """
    k1, k2, r12, rphi12, rphi21, rphiphi21 = _legs(data)
    return k1 * rphi21 * k2 * r12 == rphiphi21 * k2 * rphi12 * k1


@dataclass(frozen=True)
class CylRep:
    """Verified matrix representation of B^cyl_n on M (x) V^(x)n."""

    data: RepData
    n: int
    sigma: tuple[QMatrix, ...]  # sigma[i-1] is the matrix of sigma_i
    kappa: QMatrix
    sigma_inv: tuple[QMatrix, ...]
    kappa_inv: QMatrix

    @property
    def dim(self) -> int:
        return self.data.m * self.data.d**self.n

    def letter_matrix(self, letter: tuple[int, int]) -> QMatrix:
        i, e = letter
        if i == KAPPA:
            return self.kappa if e == 1 else self.kappa_inv
        return self.sigma[i - 1] if e == 1 else self.sigma_inv[i - 1]


def build_cyl_rep(data: RepData, n: int) -> CylRep:
    """Assemble the generator matrices and verify every defining relation."""
    if n < 1:
        raise DimensionError("strand count must be positive")
    d, m = data.d, data.m
    rhat = QMatrix.flip(d, d) * data.R
    eye_d = QMatrix.identity(d)
    eye_m = QMatrix.identity(m)
    sigma = []
    for i in range(1, n):
        mat = eye_m
        for leg in range(1, n + 1):
            if leg == i:
                mat = mat.kron(rhat)
            elif leg != i + 1:
                mat = mat.kron(eye_d)
        sigma.append(mat)
    kappa = eye_m.kron(data.T.inverse()) * data.K
    for _ in range(n - 1):
        kappa = kappa.kron(eye_d)

    for i in range(1, n - 1):
        if sigma[i - 1] * sigma[i] * sigma[i - 1] != sigma[i] * sigma[i - 1] * sigma[i]:
            raise RelationError(f"sigma_{i} sigma_{i + 1} sigma_{i} = sigma_{i + 1} sigma_{i} sigma_{i + 1}")
    for i in range(1, n):
        for j in range(i + 2, n):
            if sigma[i - 1] * sigma[j - 1] != sigma[j - 1] * sigma[i - 1]:
                raise RelationError(f"sigma_{i} sigma_{j} = sigma_{j} sigma_{i}")
    if n >= 2:
        s1 = sigma[0]
        if s1 * kappa * s1 * kappa != kappa * s1 * kappa * s1:
            raise RelationError("sigma_1 kappa sigma_1 kappa = kappa sigma_1 kappa sigma_1")
    for i in range(2, n):
        if sigma[i - 1] * kappa != kappa * sigma[i - 1]:
            raise RelationError(f"sigma_{i} kappa = kappa sigma_{i}")

    return CylRep(
        data,
        n,
        tuple(sigma),
        kappa,
        tuple(s.inverse() for s in sigma),
        kappa.inverse(),
    )


def eval_braid(rep: CylRep, w: CylBraidWord | BraidWord) -> QMatrix:
    """Multiplicative evaluation of a word; the empty word maps to the identity."""
    if w.n != rep.n:
        raise DimensionError(f"word on {w.n} strands fed to a {rep.n}-strand representation")
    out = QMatrix.identity(rep.dim)
    for letter in w.letters:
        out = out * rep.letter_matrix(letter)
    return out
