"""Exact-arithmetic toolkit for crystalline character lifts.

Submodules:

* fields     -- multiplicative characters of finite fields as exponents
* transport  -- integer transportation with exact / modular sums
* lifting    -- embedding layouts, weight construction, lift certificates
* induction  -- determinant-of-induction oracle on finite groups
* ledger     -- symbolic determinant bookkeeping and twists
* certio     -- JSON wire format and schemas
* verify     -- independent certificate verifier
* sweep      -- grid sweep driver
* cli        -- command-line entry point
"""

from .errors import CertificateError, InfeasibleError
from .fields import (
    DigitVector,
    FiniteFieldSpec,
    MultChar,
    digits,
    from_digits,
    norm_exponent,
    restrict,
)
from .induction import FrobeniusModel, MonomialRep, det_of, induce, verify_det_induction
from .ledger import (
    CrystCharSpec,
    WeightProfile,
    dth_root_correction,
    shift_for_extension,
    twist,
    twist_shout,
)
from .lifting import (
    DetSpec,
    EmbeddingLayout,
    LiftCertificate,
    LocalFieldShape,
    WeightAssignment,
    build_layout,
    compat_check,
    induce_weights,
    irr_crys_lift,
    lift_theta,
)
from .transport import (
    AssignmentMatrix,
    TransportInstance,
    regular_transport,
    transport,
    verify_assignment,
)
from .units import UnitExpr

__version__ = "0.1.0"
