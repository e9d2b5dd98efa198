"""Independent certificate verifier.

Deliberately self-contained: it re-derives every recorded identity from
the raw certificate fields using its own arithmetic (base-p expansion,
congruences, unit-expression algebra) and never calls the solvers that
produced the certificate.  A certificate passes iff every identity holds
and every recorded check value matches the recomputation.
"""

from __future__ import annotations

from fractions import Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def _base_p_digits(b: int, p: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        b, r = divmod(b, p)
        out.append(r)
    return out


def _unit_normal(obj: dict) -> tuple[int, tuple[tuple[str, Fraction], ...]]:
    acc: dict[str, Fraction] = {}
    for label, num, den in obj["factors"]:
        acc[label] = acc.get(label, Fraction(0)) + Fraction(int(num), int(den))
    return int(obj["sign"]), tuple(
        (label, e) for label, e in sorted(acc.items()) if e != 0
    )


def verify_certificate(obj: dict) -> tuple[bool, list[str]]:
    """Recompute all recorded identities of a certificate JSON document.

    Returns (pass, violations).  Assumes the document is schema-valid;
    use :func:`cryslift.certio.validate_certificate_schema` first to
    distinguish malformed documents from failed checks.
    """
    violations: list[str] = []

    sh = obj["shape"]
    p, f, e, d, t = (int(sh[x]) for x in ("p", "f", "e", "d", "t"))
    if not _is_prime(p):
        return False, [f"shape: p={p} is not prime"]
    if min(f, e, d, t) < 1:
        return False, ["shape: f, e, d, t must all be >= 1"]
    q = p ** f
    if t % (q - 1) != 0:
        violations.append(f"shape: t={t} not a multiple of q-1={q - 1}")

    big_q = p ** (f * d)
    b_exp = int(obj["theta_bar"]["b"])
    if not 0 <= b_exp <= big_q - 2:
        violations.append(f"theta_bar exponent {b_exp} outside [0, {big_q - 2}]")
        return False, violations

    a = [int(v) for v in obj["psi"]["a"]]
    if len(a) != e * f:
        violations.append(f"psi has {len(a)} exponents, expected e*f = {e * f}")
        return False, violations
    k = [int(v) for v in obj["weights"]]
    if len(k) != e * f * d:
        violations.append(f"{len(k)} weights, expected e*f*d = {e * f * d}")
        return False, violations

    # digits of theta_bar over Sigma_E0
    b_digits = _base_p_digits(b_exp, p, f * d)
    m = p - 1

    # eq_one: per unramified block, determinant exponents match the sum
    # of theta_bar's digits over the J-block mod p-1 (the block form is
    # the one equivalent to per-block feasibility; restricted digits are
    # not blockwise congruent to it when carrying crosses blocks)
    eq_one = all(
        (
            sum(a[i0 * e + r] for r in range(e))
            - sum(b_digits[j] for j in range(i0, f * d, f))
        ) % m == 0
        for i0 in range(f)
    )

    # exact row sums: weights over each Sigma_F fibre sum to a_sigma.
    # Sigma_E canonical order: index = i0*e*d + r*d + l
    def fibre_F(i0: int, r: int) -> list[int]:
        base = i0 * e * d + r * d
        return k[base : base + d]

    det_on_units = all(
        sum(fibre_F(i0, r)) == a[i0 * e + r] for i0 in range(f) for r in range(e)
    )

    if d > 1:
        # column congruences: weights over each Sigma_E0 fibre match the
        # theta_bar digit mod p-1; tau_0 = i0 + f*l
        lifts_theta_bar = all(
            (
                sum(k[i0 * e * d + r * d + l] for r in range(e))
                - b_digits[i0 + f * l]
            )
            % m
            == 0
            for i0 in range(f)
            for l in range(d)
        )
        weights_distinct = len(set(k)) == len(k)
        block_separation = True
        prev_max = None
        for i0 in range(f):
            block = [abs(v) for v in k[i0 * e * d : (i0 + 1) * e * d]]
            if prev_max is not None and min(block) <= prev_max:
                block_separation = False
            prev_max = max(block)
        regular = all(
            len(set(fibre_F(i0, r))) == d for i0 in range(f) for r in range(e)
        )
    else:
        lifts_theta_bar = None
        weights_distinct = None
        block_separation = None
        regular = True

    # eq_three / (five): theta(varpi_E) == (-1)^(d-1) psi(varpi_F) as
    # normalized unit expressions
    psi_sign, psi_factors = _unit_normal(obj["psi"]["uniformizer"])
    th_sign, th_factors = _unit_normal(obj["theta_uniformizer"])
    twist_sign = 1 if (d - 1) % 2 == 0 else -1
    det_at_uniformizer = (
        th_factors == psi_factors and th_sign == twist_sign * psi_sign
    )

    recomputed = {
        "eq_one_compat": eq_one,
        "lifts_theta_bar": lifts_theta_bar,
        "det_on_units": det_on_units,
        "det_at_uniformizer": det_at_uniformizer,
        "weights_distinct": weights_distinct,
        "block_separation": block_separation,
        "regular": regular,
    }
    for name, value in recomputed.items():
        if value is False:
            violations.append(f"identity {name} fails on recomputation")

    recorded = obj["checks"]
    for name, value in recomputed.items():
        if name in recorded and recorded[name] != value:
            violations.append(
                f"recorded check {name}={recorded[name]} disagrees with "
                f"recomputed value {value}"
            )
    for name in recorded:
        if name not in recomputed:
            violations.append(f"unknown recorded check {name!r}")

    return (not violations), violations
