"""The analysis report: every criterion evaluated on one state, with a JSON form."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from stabequiv.ghz import ghz_class_note, is_lc_ghz
from stabequiv.gf4 import is_gf4_linear
from stabequiv.minimal import corollary1_conditions, minimal_supports, theorem1_criterion
from stabequiv.pauli import pauli_to_string
from stabequiv.stabilizer import StabilizerGroup, is_fully_entangled


@dataclass
class Entanglement:
    flag: bool
    witness: list[int] | None = None


@dataclass
class SupportEntry:
    support: list[int]
    a_omega: int
    witnesses: list[str]


@dataclass
class AnalysisReport:
    """Field order is the JSON key order."""

    n: int
    fully_entangled: Entanglement
    minimal_supports: list[SupportEntry]
    per_qubit_coverage: list[str]
    theorem1: bool
    corollary1: dict[str, bool]
    gf4_linear: bool
    ghz_class: bool
    lu_equals_lc_guaranteed: bool
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> AnalysisReport:
        d = dict(d)
        d["fully_entangled"] = Entanglement(**d["fully_entangled"])
        d["minimal_supports"] = [SupportEntry(**e) for e in d["minimal_supports"]]
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> AnalysisReport:
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        fe = "yes" if self.fully_entangled.flag else f"no (splits off {self.fully_entangled.witness})"
        lines = [f"qubits: {self.n}", f"fully entangled: {fe}", "minimal supports:"]
        for e in self.minimal_supports:
            lines.append(f"  {{{','.join(map(str, e.support))}}}  A={e.a_omega}  {' '.join(e.witnesses)}")
        lines.append("coverage: " + " ".join(c or "-" for c in self.per_qubit_coverage))
        cor = " ".join(f"{k}={'T' if v else 'F'}" for k, v in self.corollary1.items())
        lines += [
            f"all-letters criterion: {self.theorem1}",
            f"sufficient conditions: {cor}",
            f"GF(4)-linear: {self.gf4_linear}",
            f"GHZ class: {self.ghz_class}",
            f"LU = LC guaranteed: {self.lu_equals_lc_guaranteed}",
        ]
        lines += [f"note: {t}" for t in self.notes]
        return "\n".join(lines) + "\n"


def analyze(
    g: StabilizerGroup, max_support_weight: int | None = None, max_enum_qubits: int | None = None
) -> AnalysisReport:
    """Evaluate everything on ``g``. ``max_support_weight`` only trims the listing."""
    n = g.n
    ent = is_fully_entangled(g)
    witness = ent.witness.indices() if ent.witness is not None else None
    table = minimal_supports(g, max_enum_qubits)
    entries = [
        SupportEntry(e.omega.indices(), e.a_omega, [pauli_to_string(w, explicit_sign=True) for w in e.witnesses])
        for e in table.entries
        if max_support_weight is None or len(e.omega) <= max_support_weight
    ]
    theorem1 = theorem1_criterion(g, max_enum_qubits).holds
    cor = corollary1_conditions(g, max_enum_qubits)
    ghz = is_lc_ghz(g)

    notes = []
    if n <= 2:
        notes.append("at most two qubits: LU and LC classes coincide for every stabilizer state")
    scope_note = ghz_class_note(g)
    if scope_note:
        notes.append(scope_note)
    if max_support_weight is not None and len(entries) < len(table.entries):
        notes.append(f"minimal supports listed up to weight {max_support_weight} ({len(entries)} of {len(table.entries)})")
    if theorem1:
        fired = [k for k, v in cor.as_dict().items() if v]
        via = f" (sufficient conditions {', '.join(fired)})" if fired else ""
        notes.append(f"X, Y and Z occur on every qubit of the minimal-element subgroup{via}")
    if ghz:
        notes.append("GHZ class: LU and LC classes coincide")

    return AnalysisReport(
        n=n,
        fully_entangled=Entanglement(ent.fully_entangled, witness),
        minimal_supports=entries,
        per_qubit_coverage=["".join(sorted(c)) for c in table.per_qubit_coverage],
        theorem1=theorem1,
        corollary1=cor.as_dict(),
        gf4_linear=is_gf4_linear(g),
        ghz_class=ghz,
        lu_equals_lc_guaranteed=theorem1 or ghz or n <= 2,
        notes=notes,
    )
