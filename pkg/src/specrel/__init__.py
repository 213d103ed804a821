"""Executable special relativity over exact ordered fields."""

__version__ = "0.1.0"

from .field import FieldMode, Scalar, parse_scalar, sqrt  # noqa: E402
from .geometry import Cone, Line, Plane, Point, Vector  # noqa: E402
from .worldview import Body, CoordinateMap, Model, W, build_boost_model, wvt  # noqa: E402
from .axioms import AxiomId, SamplingConfig, audit_all, check_axiom  # noqa: E402
from .noftl import FTLHypothesis, build_ftl_witness, check_noftl, validate_certificate  # noqa: E402

__all__ = [
    "AxiomId", "Body", "Cone", "CoordinateMap", "FTLHypothesis", "FieldMode", "Line",
    "Model", "Plane", "Point", "SamplingConfig", "Scalar", "Vector", "W", "audit_all",
    "build_boost_model", "build_ftl_witness", "check_axiom", "check_noftl", "parse_scalar",
    "sqrt", "validate_certificate", "wvt",
]
