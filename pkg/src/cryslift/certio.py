"""JSON wire format for certificates and reports.

All integers serialize as decimal strings so that consumers without
big-integer support cannot silently lose precision.  The canonical
embedding orderings documented in :mod:`cryslift.lifting` are part of
this format.
"""

from __future__ import annotations

import json
from importlib import resources

import jsonschema

from .errors import CertificateError
from .fields import FiniteFieldSpec, MultChar
from .lifting import DetSpec, LiftCertificate, LocalFieldShape, WeightAssignment
from .units import UnitExpr

CERTIFICATE_SCHEMA_ID = "lift-certificate/v1"


def _load_schema(name: str) -> dict:
    text = resources.files("cryslift.schemas").joinpath(name).read_text()
    return json.loads(text)


def certificate_to_json(cert: LiftCertificate) -> dict:
    sh = cert.shape
    return {
        "schema": CERTIFICATE_SCHEMA_ID,
        "shape": {
            "p": str(sh.p),
            "f": str(sh.f),
            "e": str(sh.e),
            "d": str(sh.d),
            "t": str(sh.t),
        },
        "theta_bar": {"b": str(cert.theta_bar.b)},
        "psi": {
            "a": [str(v) for v in cert.psi.a],
            "uniformizer": cert.psi.uniformizer.to_json(),
        },
        "weights": [str(v) for v in cert.weights.k],
        "theta_uniformizer": cert.theta_uniformizer.to_json(),
        "checks": dict(cert.checks),
        "hypotheses": dict(cert.hypotheses),
    }


def certificate_from_json(obj: dict) -> LiftCertificate:
    validate_certificate_schema(obj)
    sh = obj["shape"]
    shape = LocalFieldShape(
        int(sh["p"]), int(sh["f"]), int(sh["e"]), int(sh["d"]), int(sh["t"])
    )
    theta_bar = MultChar(
        FiniteFieldSpec(shape.p, shape.f * shape.d), int(obj["theta_bar"]["b"])
    )
    psi = DetSpec(
        tuple(int(v) for v in obj["psi"]["a"]),
        UnitExpr.from_json(obj["psi"]["uniformizer"]),
    )
    return LiftCertificate(
        shape=shape,
        theta_bar=theta_bar,
        psi=psi,
        weights=WeightAssignment(tuple(int(v) for v in obj["weights"])),
        theta_uniformizer=UnitExpr.from_json(obj["theta_uniformizer"]),
        checks=dict(obj["checks"]),
        hypotheses=dict(obj.get("hypotheses", {})),
    )


def validate_certificate_schema(obj: dict) -> None:
    """Structural validation only; identity checks live in the verifier."""
    try:
        jsonschema.validate(obj, _load_schema("certificate.schema.json"))
    except jsonschema.ValidationError as exc:
        raise CertificateError(f"certificate schema violation: {exc.message}") from exc


def validate_report_schema(obj: dict) -> None:
    try:
        jsonschema.validate(obj, _load_schema("report.schema.json"))
    except jsonschema.ValidationError as exc:
        raise CertificateError(f"report schema violation: {exc.message}") from exc


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
