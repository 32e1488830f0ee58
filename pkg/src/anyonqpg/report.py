"""Verification reports: per-identity residuals with pass/fail flags."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class ReportItem:
    label: str
    residual: float
    passed: bool
    exact: bool = True

    def to_json(self) -> dict:
        res = "0" if self.exact and self.residual == 0.0 else self.residual
        return {"label": self.label, "residual": res, "pass": self.passed}


@dataclass
class VerificationReport:
    """Outcome of one verification suite.

    mode is "exact" (residuals are exact-zero checks in Q(w_N)) or "approx"
    (residuals are max-entry magnitudes compared against eps).
    """

    subject: str
    mode: str = "exact"
    eps: float = 1e-9
    seed: str | None = None
    items: list[ReportItem] = field(default_factory=list)

    def add(self, label: str, residual: float, passed: bool, exact: bool | None = None):
        if exact is None:
            exact = self.mode == "exact"
        self.items.append(ReportItem(label, residual, passed, exact))

    def add_exact(self, label: str, is_zero: bool, residual: float = 0.0):
        self.items.append(
            ReportItem(label, 0.0 if is_zero else residual, is_zero, exact=True)
        )

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    @property
    def max_residual(self) -> float:
        return max((item.residual for item in self.items), default=0.0)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        out = VerificationReport(self.subject, self.mode, self.eps, self.seed)
        out.items = list(self.items) + list(other.items)
        return out

    def failures(self) -> list[ReportItem]:
        return [item for item in self.items if not item.passed]

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "mode": self.mode,
            "items": [i.to_json() for i in sorted(self.items, key=lambda x: x.label)],
            "seed": self.seed,
        }

    def summary(self) -> str:
        bad = self.failures()
        status = "PASS" if not bad else f"FAIL ({len(bad)}/{len(self.items)})"
        return f"{self.subject}: {status} [{len(self.items)} checks, mode={self.mode}]"
