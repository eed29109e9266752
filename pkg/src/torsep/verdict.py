"""The Verdict type shared by the theorem deciders and the stratum oracle.

A verdict pairs a holds/fails decision with a certificate: a plain dict
whose ``kind`` field selects one of the documented certificate shapes
(see ``torsep.verification`` for the exact arithmetic checks each kind
must pass).  Ordered coordinate pairs ``(j, i)`` in certificates always
mean "x_{j+1} = 0 forces x_{i+1} = 0 on the closure".

For projective verdicts the certificate data refers to the homogenized
weights (each weight with an appended coordinate 1); index data is
unaffected by homogenization and refers to the original positions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

PROPERTIES = ("SP", "WSP", "SSP")
MODES = ("affine", "projective")


@dataclass(frozen=True)
class Verdict:
    property_name: str
    mode: str
    holds: bool
    certificate: Mapping[str, Any]
    notes: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        assert self.property_name in PROPERTIES
        assert self.mode in MODES

    @property
    def kind(self) -> str:
        return self.certificate.get("kind", "")
