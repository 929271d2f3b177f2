"""Syntactic fragment detection with the known complexity classifications."""

from __future__ import annotations

from dataclasses import dataclass

from .formula import DERIVED, ClassNeg, Dep, Formula, Incl, Indep, subformulas


@dataclass(frozen=True)
class ComplexityNote:
    sat_class: str
    val_class: str
    mc_class: str


_UNKNOWN = ComplexityNote("unknown", "unknown", "unknown")
_TEAM_LOGIC = ComplexityNote("AEXPTIME(poly)-complete", "AEXPTIME(poly)-complete", "PSPACE-complete")

_TABLE = {
    "PL": ComplexityNote("NP-complete", "coNP-complete", "NC1-complete"),
    "PD": ComplexityNote("NP-complete", "NEXPTIME-complete", "NP-complete"),
    "PL[⊥c]": ComplexityNote("NP-complete", "NEXPTIME-hard, in coNEXPTIME^NP", "NP-complete"),
    "PL[⊆]": ComplexityNote("EXPTIME-complete", "coNP-complete", "P-complete"),
}


@dataclass(frozen=True)
class Fragment:
    uses_dep: bool
    uses_indep: bool
    uses_incl: bool
    uses_classneg: bool
    uses_derived: bool

    @property
    def has_tilde(self) -> bool:
        # eliminating a derived operator introduces classical negation
        return self.uses_classneg or self.uses_derived

    @property
    def label(self) -> str:
        atoms = [
            name
            for name, used in (("dep", self.uses_dep), ("⊥c", self.uses_indep), ("⊆", self.uses_incl))
            if used
        ]
        if not self.has_tilde and atoms == ["dep"]:
            return "PD"
        if self.has_tilde:
            atoms.append("∼")
        return f"PL[{','.join(atoms)}]" if atoms else "PL"

    @property
    def complexity_note(self) -> ComplexityNote:
        if self.has_tilde:
            # PL[C,∼] for any finite set C of polynomial-time checkable atoms
            return _TEAM_LOGIC
        return _TABLE.get(self.label, _UNKNOWN)

    def within(self, *, dep: bool = False, indep: bool = False, incl: bool = False,
               classneg: bool = False, derived: bool = False) -> bool:
        """True when every feature used is among the allowed ones."""
        return (
            (dep or not self.uses_dep)
            and (indep or not self.uses_indep)
            and (incl or not self.uses_incl)
            and (classneg or not self.uses_classneg)
            and (derived or not self.uses_derived)
        )


def classify(f: Formula) -> Fragment:
    kinds = {type(g) for g in subformulas(f)}
    return Fragment(
        uses_dep=Dep in kinds,
        uses_indep=Indep in kinds,
        uses_incl=Incl in kinds,
        uses_classneg=ClassNeg in kinds,
        uses_derived=any(k in kinds for k in DERIVED),
    )


def describe(f: Formula) -> str:
    """One-line summary such as ``PL[⊆]; SAT EXPTIME-complete; VAL ...``."""
    frag = classify(f)
    note = frag.complexity_note
    return f"{frag.label}; SAT {note.sat_class}; VAL {note.val_class}; MC {note.mc_class}"
