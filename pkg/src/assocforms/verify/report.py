"""Running the identity suite and rendering reports."""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass

from .. import __version__
from .checks import BY_ID, CHECK_IDS, SAMPLED, SYMBOLIC_FAMILY, SYMBOLIC_FULL, Outcome

PASS = "pass"
FAIL = "fail"

_NOTES = {
    SYMBOLIC_FULL: "proof: the residual is identically zero as a polynomial in all coefficient indeterminates",
    SYMBOLIC_FAMILY: "proof on the stated family; any sampled part is probabilistic",
    SAMPLED: "exact on each sample",
}


@dataclass
class CheckResult:
    id: str
    anchor: str
    mode: str
    samples: int
    verdict: str
    duration_ms: float | None
    witness: dict | None
    domain: str | None
    note: str
    details: dict

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_dict(self) -> dict:
        doc = {
            "id": self.id,
            "anchor": self.anchor,
            "mode": self.mode,
            "samples": self.samples,
            "verdict": self.verdict,
            "duration_ms": self.duration_ms,
        }
        if self.domain is not None:
            doc["sampling_domain"] = self.domain
        doc["note"] = self.note
        if self.details:
            doc["details"] = self.details
        if self.witness is not None:
            doc["witness"] = self.witness
        return doc


@dataclass
class ReportDocument:
    version: str
    config: dict
    checks: list

    @property
    def summary(self) -> dict:
        passed = sum(1 for c in self.checks if c.passed)
        return {"total": len(self.checks), "passed": passed, "failed": len(self.checks) - passed}

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "config": self.config,
            "checks": [c.to_dict() for c in self.checks],
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [f"assocforms {self.version} verify (seed {self.config['seed']})"]
        for c in self.checks:
            extra = f", {c.samples} samples" if c.samples else ""
            timing = f" [{c.duration_ms:.0f} ms]" if c.duration_ms is not None else ""
            lines.append(f"{c.id:4} {c.verdict.upper():4}  {c.mode}{extra}{timing}  {c.anchor}")
            if c.witness is not None:
                lines.append("     witness: " + json.dumps(c.witness, ensure_ascii=False))
        s = self.summary
        lines.append(f"{s['passed']}/{s['total']} checks passed")
        return "\n".join(lines)


def _soundness(mode: str, out: Outcome) -> str:
    note = _NOTES[mode]
    if out.samples and out.domain and out.degree:
        note += (
            f"; sampled part: failure probability per sample at most {out.degree}/|S| "
            "(Schwartz-Zippel) for the sample space S above"
        )
    return note


def parse_selection(selection) -> list:
    if selection is None or selection == "all":
        return list(CHECK_IDS)
    if isinstance(selection, str):
        selection = [s for s in selection.split(",") if s.strip()]
    ids = []
    for s in selection:
        key = s.strip().upper()
        if key not in BY_ID:
            raise KeyError(f"unknown check {s!r}; available: {', '.join(CHECK_IDS)}")
        if key not in ids:
            ids.append(key)
    return sorted(ids, key=CHECK_IDS.index)


def run_check(check_id: str, samples=None, seed: int = 0, timings: bool = False) -> CheckResult:
    ch = BY_ID[check_id]
    r = random.Random(f"{seed}:{check_id}")
    start = time.perf_counter()
    try:
        out = ch.run(samples, r)
    except Exception as exc:  # an unexpected error is reported, never fatal to the suite
        out = Outcome()
        out.expect(False, error=f"{type(exc).__name__}: {exc}")
    elapsed = round((time.perf_counter() - start) * 1000, 1) if timings else None
    return CheckResult(
        id=ch.id,
        anchor=ch.anchor,
        mode=ch.mode,
        samples=out.samples,
        verdict=PASS if out.passed else FAIL,
        duration_ms=elapsed,
        witness=out.witness,
        domain=out.domain,
        note=_soundness(ch.mode, out),
        details=out.details,
    )


def run_suite(selection=None, samples=None, seed: int = 0, timings: bool = False) -> ReportDocument:
    """Run the selected checks in their declared order."""
    ids = parse_selection(selection)
    config = {"checks": ids, "samples": samples, "seed": seed}
    results = [run_check(i, samples, seed, timings) for i in ids]
    return ReportDocument(__version__, config, results)
