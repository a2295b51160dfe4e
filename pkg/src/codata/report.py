"""Law-check reports and their JSON form."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Optional

PASS = "pass"
FAIL = "fail"
VACUOUS = "vacuous"


@dataclass
class LawEntry:
    law_id: str
    instance_id: str
    status: str
    depth: int
    samples: int
    counterexample: Optional[dict] = None
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if self.status == FAIL and self.counterexample is None:
            raise ValueError(f"failing entry {self.law_id}/{self.instance_id} needs a counterexample")

    @property
    def ok(self) -> bool:
        return self.status != FAIL


@dataclass
class LawReport:
    entries: list = field(default_factory=list)

    def add(self, entry: LawEntry) -> LawEntry:
        self.entries.append(entry)
        return entry

    def extend(self, other: "LawReport") -> "LawReport":
        self.entries.extend(other.entries)
        return self

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def failures(self) -> list:
        return [e for e in self.entries if e.status == FAIL]

    def status_of(self, law_id: str, instance_id: Optional[str] = None) -> str:
        """Combined status of the matching entries: fail beats pass beats vacuous."""
        found = [
            e.status
            for e in self.entries
            if e.law_id == law_id and (instance_id is None or e.instance_id == instance_id)
        ]
        if not found:
            raise KeyError(law_id)
        for status in (FAIL, PASS):
            if status in found:
                return status
        return VACUOUS

    def summary(self) -> dict:
        counts = {PASS: 0, FAIL: 0, VACUOUS: 0}
        for e in self.entries:
            counts[e.status] += 1
        counts["total"] = len(self.entries)
        return counts

    def sorted_entries(self) -> list:
        return sorted(self.entries, key=lambda e: (e.law_id, e.instance_id))

    def to_dict(self) -> dict:
        return {
            "entries": [asdict(e) for e in self.sorted_entries()],
            "summary": self.summary(),
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True, default=_jsonable)

    def __str__(self):
        rows = [f"{'law':<40} {'instance':<36} {'status':<8}"]
        for e in self.sorted_entries():
            rows.append(f"{e.law_id:<40} {e.instance_id:<36} {e.status:<8}")
        s = self.summary()
        rows.append(f"{s['total']} checks: {s[PASS]} pass, {s[FAIL]} fail, {s[VACUOUS]} vacuous")
        return "\n".join(rows)


def _jsonable(obj: Any):
    # PairValue is a tuple and serializes as a list; this catches Layer etc.
    to_json = getattr(obj, "to_json", None)
    if to_json is not None:
        return to_json()
    return repr(obj)


def check_samples(law_id, instance_id, depth, samples, predicate, describe, notes=()) -> LawEntry:
    """Evaluate `predicate` on each sample; the first violation becomes the counterexample.

    `predicate(sample)` returns True when the law holds for that sample;
    `describe(sample)` gives a JSON-able payload for reports.
    """
    samples = list(samples)
    notes = list(notes)
    if not samples:
        notes.append("no samples")
        return LawEntry(law_id, instance_id, VACUOUS, depth, 0, notes=notes)
    for sample in samples:
        if not predicate(sample):
            return LawEntry(law_id, instance_id, FAIL, depth, len(samples), describe(sample), notes)
    return LawEntry(law_id, instance_id, PASS, depth, len(samples), notes=notes)
