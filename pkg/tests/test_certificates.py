import copy
import json
import random

import pytest

from cryslift.certio import (
    certificate_from_json,
    certificate_to_json,
    dumps,
    validate_certificate_schema,
    validate_report_schema,
)
from cryslift.errors import CertificateError
from cryslift.fields import FiniteFieldSpec, MultChar, digits
from cryslift.lifting import DetSpec, LocalFieldShape, irr_crys_lift
from cryslift.units import UnitExpr
from cryslift.verify import verify_certificate

U = UnitExpr.symbol("psi(varpi_F)")


def build_cert(p=3, f=1, e=1, d=2, t=None, b=5, a=(3,)):
    shape = LocalFieldShape(p, f, e, d, t if t is not None else p ** f - 1)
    tb = MultChar(FiniteFieldSpec(p, f * d), b)
    return irr_crys_lift(tb, DetSpec(tuple(a), U), shape)


def random_cert(rng):
    shapes = [(3, 1, 1, 2), (2, 1, 2, 3), (3, 2, 2, 2), (5, 1, 3, 2), (2, 2, 1, 2)]
    p, f, e, d = rng.choice(shapes)
    big_q = p ** (f * d)
    b = rng.randrange(big_q - 1)
    tb = MultChar(FiniteFieldSpec(p, f * d), b)
    bd = digits(tb).digits
    a = []
    for i0 in range(f):
        block = [rng.randint(-10, 10) for _ in range(e)]
        target = sum(bd[j] for j in range(i0, f * d, f))
        block[0] += (target - sum(block)) % (p - 1)
        a.extend(block)
    return build_cert(p, f, e, d, None, b, tuple(a))


class TestRoundTrip:
    def test_json_round_trip_bit_identical(self):
        cert = build_cert()
        doc = certificate_to_json(cert)
        again = certificate_to_json(certificate_from_json(json.loads(dumps(doc))))
        assert dumps(doc) == dumps(again)

    def test_round_trip_verifies(self):
        cert = build_cert()
        doc = certificate_to_json(cert)
        ok, violations = verify_certificate(doc)
        assert ok, violations
        cert2 = certificate_from_json(doc)
        ok, violations = verify_certificate(certificate_to_json(cert2))
        assert ok, violations

    def test_schema_rejects_garbage(self):
        with pytest.raises(CertificateError):
            validate_certificate_schema({"schema": "lift-certificate/v1"})
        with pytest.raises(CertificateError):
            validate_certificate_schema({"hello": "world"})

    def test_report_schema(self):
        validate_report_schema(
            {
                "schema": "sweep-report/v1",
                "config": {},
                "instances": [{"id": "x", "pass": True, "violations": []}],
                "totals": {"instances": 1, "passed": 1, "failed": 0},
            }
        )
        with pytest.raises(CertificateError):
            validate_report_schema({"schema": "sweep-report/v1"})


class TestMutations:
    """Single-field perturbations that break a recorded identity must be
    caught by the independent verifier."""

    def test_weight_perturbation_caught(self):
        doc = certificate_to_json(build_cert())
        for idx in range(len(doc["weights"])):
            for delta in (1, -1):
                mutated = copy.deepcopy(doc)
                mutated["weights"][idx] = str(int(mutated["weights"][idx]) + delta)
                ok, violations = verify_certificate(mutated)
                assert not ok, (idx, delta)
                assert any("det_on_units" in v for v in violations)

    def test_uniformizer_sign_flip_caught(self):
        doc = certificate_to_json(build_cert())
        mutated = copy.deepcopy(doc)
        mutated["theta_uniformizer"]["sign"] *= -1
        ok, violations = verify_certificate(mutated)
        assert not ok
        assert any("det_at_uniformizer" in v for v in violations)

    def test_determinant_exponent_edit_caught(self):
        doc = certificate_to_json(build_cert())
        mutated = copy.deepcopy(doc)
        mutated["psi"]["a"][0] = str(int(mutated["psi"]["a"][0]) + 1)
        ok, _ = verify_certificate(mutated)
        assert not ok

    def test_recorded_check_flip_caught(self):
        doc = certificate_to_json(build_cert())
        mutated = copy.deepcopy(doc)
        mutated["checks"]["weights_distinct"] = False
        ok, violations = verify_certificate(mutated)
        assert not ok
        assert any("disagrees" in v for v in violations)

    def test_mutation_battery_random_certs(self):
        rng = random.Random(17)
        for _ in range(30):
            doc = certificate_to_json(random_cert(rng))
            ok, violations = verify_certificate(doc)
            assert ok, violations
            # one weight, one exponent, one sign mutation per certificate
            m = copy.deepcopy(doc)
            i = rng.randrange(len(m["weights"]))
            m["weights"][i] = str(int(m["weights"][i]) + rng.choice([1, -1]))
            assert not verify_certificate(m)[0]
            m = copy.deepcopy(doc)
            i = rng.randrange(len(m["psi"]["a"]))
            m["psi"]["a"][i] = str(int(m["psi"]["a"][i]) + 1)
            assert not verify_certificate(m)[0]
            m = copy.deepcopy(doc)
            m["theta_uniformizer"]["sign"] *= -1
            assert not verify_certificate(m)[0]
