"""Named pass/fail checks collected into reports."""

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    residual: object = None
    value: object = None
    detail: str = ""

    @classmethod
    def zero(cls, name, residual, detail=""):
        """Passes iff the symbolic ``residual`` is the zero element."""
        return cls(name, residual.is_zero, residual=residual, detail=detail)

    @classmethod
    def nonzero(cls, name, residual, detail=""):
        """Passes iff ``residual`` is not zero (expected counterexamples)."""
        return cls(name, not residual.is_zero, residual=residual, detail=detail)

    def to_dict(self, dump_terms=None):
        out = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if self.residual is not None:
            out["residual_terms"] = len(self.residual)
            if dump_terms or (dump_terms is None and not self.passed):
                out["residual"] = str(self.residual)
        if self.value is not None:
            out["value"] = str(self.value)
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)

    def add(self, check):
        self.checks.append(check)
        return check

    def extend(self, other):
        self.checks.extend(other.checks)

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __len__(self):
        return len(self.checks)

    def to_dict(self):
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [c.to_dict() for c in self.checks],
        }

    def format(self):
        lines = [f"# {self.title}"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            extra = f" [{c.value}]" if c.value is not None else ""
            lines.append(f"{status}  {c.name}{extra}")
            if not c.passed and c.residual is not None:
                lines.append(f"      residual: {c.residual}")
        lines.append(f"{len(self.checks) - len(self.failures())}/{len(self.checks)} passed")
        return "\n".join(lines)
