from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of a verification pass: failures carry a witness, notes do not fail."""
    name: str = ""
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    checked: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def __bool__(self):
        return self.ok

    def check(self, label, passed, witness=None):
        self.checked.append(label)
        if not passed:
            self.failures.append((label, witness))
        return passed

    def fail(self, label, witness=None):
        return self.check(label, False, witness)

    def note(self, msg):
        self.notes.append(msg)

    def merge(self, other):
        self.failures.extend(other.failures)
        self.notes.extend(other.notes)
        self.checked.extend(other.checked)
        return self

    def __str__(self):
        head = f"{self.name or 'report'}: {'PASS' if self.ok else 'FAIL'} ({len(self.checked)} checks)"
        lines = [head]
        lines += [f"  FAIL {label}: {w}" for label, w in self.failures]
        lines += [f"  note: {m}" for m in self.notes]
        return "\n".join(lines)
