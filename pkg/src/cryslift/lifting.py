"""Embedding bookkeeping and weight construction for character lifts.

Setting: F/Q_p with residue degree f and ramification e, E/F unramified
of degree d.  Writing F_0 for the maximal unramified subfield and E_0
for its degree-d unramified extension, the embeddings of E are pairs
(embedding of F, embedding of E_0) agreeing on F_0.  We index everything
canonically:

* Sigma_F0: Frobenius order, i0 = 0..f-1.
* Sigma_E0: Frobenius order, j = 0..fd-1; j restricts to i0 = j mod f.
* Sigma_F: grouped by i0, then ramified index r = 0..e-1; global index
  i0*e + r.
* Sigma_E: grouped by i0, then (r, l) with l = 0..d-1 indexing the
  element i0 + f*l of J_{i0}; global index i0*e*d + r*d + l.

These orderings are part of the certificate wire format.

The weight construction solves, per i0-block, a distinct-entry
transportation problem: rows are the e embeddings of F above i0 with
exact sums a_sigma, columns the d embeddings of E_0 above i0 with sums
congruent to the digit b_{tau_0} mod p-1.  Threading the running max
|weight| as the magnitude bound C keeps blocks separated and all e*f*d
weights globally distinct.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InfeasibleError
from .fields import FiniteFieldSpec, MultChar, digits, is_prime
from .transport import regular_transport, verify_assignment
from .units import UnitExpr


@dataclass(frozen=True)
class LocalFieldShape:
    """Combinatorial shadow of F/Q_p plus the unramified extension degree d.

    t is the order of the roots of unity of F; it is an input (the
    combinatorial data cannot determine its p-part) and must be a
    multiple of q-1 = p^f - 1.
    """

    p: int
    f: int
    e: int
    d: int
    t: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        for name in ("f", "e", "d", "t"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name}={getattr(self, name)} must be >= 1")
        if self.t % (self.q - 1) != 0:
            raise ValueError(f"t={self.t} is not a multiple of q-1={self.q - 1}")

    @property
    def q(self) -> int:
        return self.p ** self.f

    @property
    def residue_field_F(self) -> FiniteFieldSpec:
        return FiniteFieldSpec(self.p, self.f)

    @property
    def residue_field_E(self) -> FiniteFieldSpec:
        return FiniteFieldSpec(self.p, self.f * self.d)


@dataclass(frozen=True)
class EmbeddingLayout:
    """Index sets for Sigma_F, Sigma_E0, Sigma_E in the canonical order."""

    f: int
    e: int
    d: int
    # block i0 -> list of global Sigma_F indices (the e embeddings above i0)
    I_blocks: tuple[tuple[int, ...], ...]
    # block i0 -> list of Sigma_E0 indices (the d embeddings above i0)
    J_blocks: tuple[tuple[int, ...], ...]
    # Sigma_E index -> (Sigma_F index, Sigma_E0 index)
    sigma_E: tuple[tuple[int, int], ...]

    @property
    def size_F(self) -> int:
        return self.e * self.f

    @property
    def size_E0(self) -> int:
        return self.f * self.d

    @property
    def size_E(self) -> int:
        return self.e * self.f * self.d

    def E_block(self, i0: int) -> range:
        """Global Sigma_E indices of the i0-block."""
        w = self.e * self.d
        return range(i0 * w, (i0 + 1) * w)


def build_layout(shape: LocalFieldShape) -> EmbeddingLayout:
    """Enumerate the embedding index sets for a valid shape."""
    f, e, d = shape.f, shape.e, shape.d
    I_blocks = tuple(tuple(i0 * e + r for r in range(e)) for i0 in range(f))
    J_blocks = tuple(tuple(i0 + f * l for l in range(d)) for i0 in range(f))
    sigma_E = tuple(
        (i0 * e + r, i0 + f * l)
        for i0 in range(f)
        for r in range(e)
        for l in range(d)
    )
    return EmbeddingLayout(f, e, d, I_blocks, J_blocks, sigma_E)


@dataclass(frozen=True)
class DetSpec:
    """A determinant character: unit-part exponents over Sigma_F plus the
    symbolic value at the uniformizer of F."""

    a: tuple[int, ...]
    uniformizer: UnitExpr

    def validate(self, layout: EmbeddingLayout) -> None:
        if len(self.a) != layout.size_F:
            raise ValueError(
                f"determinant exponent tuple has length {len(self.a)}, "
                f"expected |Sigma_F| = {layout.size_F}"
            )


@dataclass(frozen=True)
class WeightAssignment:
    """Weights k_tau indexed by Sigma_E in canonical order."""

    k: tuple[int, ...]


@dataclass(frozen=True)
class LiftCertificate:
    """Machine-checkable record of a constructed lift.

    checks maps identity names to booleans (or None when d = 1 makes a
    condition inapplicable); hypotheses records input-side promises that
    are declared, not verified.
    """

    shape: LocalFieldShape
    theta_bar: MultChar
    psi: DetSpec
    weights: WeightAssignment
    theta_uniformizer: UnitExpr
    checks: dict = field(default_factory=dict)
    hypotheses: dict = field(default_factory=dict)


def compat_check(theta_bar: MultChar, psi: DetSpec, layout: EmbeddingLayout,
                 shape: LocalFieldShape) -> bool:
    """Residue compatibility of (theta_bar, psi) in exponent form.

    For each unramified block i0 the determinant exponents above i0 must
    sum, mod p-1, to the total of theta_bar's digits over the J-block of
    i0.  Note the block digit sums are *not* in general congruent to the
    digits of theta_bar's restriction to the residue field of F: reducing
    a digit vector to canonical form carries residue between positions
    (replacing digit b_j by b_j - p and b_{j+1} by b_{j+1} + 1 shifts the
    two block sums by -1 and +1 mod p-1).  The block form used here is the
    one that is exactly equivalent to per-block feasibility of the weight
    construction; the two forms agree whenever f = 1 or d = 1.
    """
    if theta_bar.field != shape.residue_field_E:
        raise ValueError("theta_bar lives over the wrong residue field")
    psi.validate(layout)
    b = digits(theta_bar).digits
    p = shape.p
    # p = 2 makes the modulus 1 and the condition vacuous
    return all(
        (
            sum(psi.a[s] for s in layout.I_blocks[i0])
            - sum(b[j] for j in layout.J_blocks[i0])
        ) % (p - 1) == 0
        for i0 in range(layout.f)
    )


def lift_theta(theta_bar: MultChar, psi: DetSpec, shape: LocalFieldShape) -> WeightAssignment:
    """Construct pairwise distinct weights matching psi exactly on each
    Sigma_F fibre and theta_bar's digits mod p-1 on each Sigma_E0 fibre.

    d = 1 degenerates to k = a (forced by the exact-sum condition); the
    distinctness and digit conditions are then not guaranteed.
    """
    layout = build_layout(shape)
    if not compat_check(theta_bar, psi, layout, shape):
        raise InfeasibleError(
            "theta_bar and psi are incompatible mod p-1: no lift exists"
        )
    if shape.d == 1:
        return WeightAssignment(tuple(psi.a))

    b = digits(theta_bar).digits  # indexed by Sigma_E0
    p, e, d = shape.p, shape.e, shape.d
    k: list[int] = []
    C = 0
    for i0 in range(layout.f):
        a_block = [psi.a[s] for s in layout.I_blocks[i0]]
        b_block = [b[j] for j in layout.J_blocks[i0]]
        sol = regular_transport(a_block, b_block, p - 1, C)
        ok, violations = verify_assignment(sol)
        assert ok, f"solver output failed its own checker: {violations}"
        for r in range(e):
            k.extend(sol.entries[r])
        C = max(abs(v) for v in k)
    return WeightAssignment(tuple(k))


def induce_weights(
    k: WeightAssignment, layout: EmbeddingLayout
) -> tuple[list[tuple[int, ...]], bool]:
    """Per-Sigma_F weight multisets of the induced representation.

    Each fibre is sorted descending; the induced representation has
    regular weights iff every fibre has d distinct values.
    """
    fibres: list[tuple[int, ...]] = []
    for s in range(layout.size_F):
        vals = [k.k[t] for t, (sig, _) in enumerate(layout.sigma_E) if sig == s]
        fibres.append(tuple(sorted(vals, reverse=True)))
    regular = all(len(set(fib)) == layout.d for fib in fibres)
    return fibres, regular


def _block_separation_holds(k: tuple[int, ...], layout: EmbeddingLayout) -> bool:
    prev_max = None
    for i0 in range(layout.f):
        block = [abs(k[t]) for t in layout.E_block(i0)]
        if prev_max is not None and min(block) <= prev_max:
            return False
        prev_max = max(block)
    return True


def irr_crys_lift(theta_bar: MultChar, psi: DetSpec, shape: LocalFieldShape) -> LiftCertificate:
    """Full lift certificate: weights, twisted uniformizer value, and the
    record of every checked identity.

    The uniformizer value of the lifted character is (-1)^(d-1) times the
    determinant's value, per determinant-of-induction.
    """
    layout = build_layout(shape)
    compat = compat_check(theta_bar, psi, layout, shape)
    if not compat:
        raise InfeasibleError("incompatible (theta_bar, psi): no certificate")
    k = lift_theta(theta_bar, psi, shape)
    d = shape.d
    theta_unif = psi.uniformizer if d % 2 == 1 else psi.uniformizer.negate()

    # recorded identities, each recomputed here from the raw data
    row_sums_exact = all(
        sum(k.k[t] for t, (sig, _) in enumerate(layout.sigma_E) if sig == s)
        == psi.a[s]
        for s in range(layout.size_F)
    )
    if d > 1:
        b = digits(theta_bar).digits
        col_congruent = all(
            (
                sum(k.k[t] for t, (_, j) in enumerate(layout.sigma_E) if j == j0)
                - b[j0]
            )
            % (shape.p - 1)
            == 0
            for j0 in range(layout.size_E0)
        )
        distinct = len(set(k.k)) == layout.size_E
        separation = _block_separation_holds(k.k, layout)
    else:
        col_congruent = None
        distinct = None
        separation = None
    _, regular = induce_weights(k, layout)
    # (-1)^(d-1) * theta(varpi_E) == psi(varpi_F), symbolically
    unif_sign = theta_unif if d % 2 == 1 else theta_unif.negate()
    det_at_uniformizer = unif_sign == psi.uniformizer

    checks = {
        "eq_one_compat": compat,
        "lifts_theta_bar": col_congruent,
        "det_on_units": row_sums_exact,
        "det_at_uniformizer": det_at_uniformizer,
        "weights_distinct": distinct,
        "block_separation": separation,
        "regular": regular if d > 1 else True,
    }
    hypotheses = {
        "residual_uniformizer_value": (
            "theta_bar(Art_E(varpi_E)) is assumed congruent to "
            "(-1)^(d-1) * psi(Art_F(varpi_F)); the residual value at the "
            "uniformizer is not part of the character data"
        )
    }
    return LiftCertificate(
        shape=shape,
        theta_bar=theta_bar,
        psi=psi,
        weights=k,
        theta_uniformizer=theta_unif,
        checks=checks,
        hypotheses=hypotheses,
    )
