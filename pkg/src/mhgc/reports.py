"""Pass/fail bookkeeping for verification stages.

Checks are recorded in a deterministic order; a failing check carries a
human-readable witness (the first counterexample found in that cell).
"""


class Check:
    __slots__ = ("name", "passed", "witness")

    def __init__(self, name, passed, witness=None):
        self.name = name
        self.passed = passed
        self.witness = witness

    def to_dict(self):
        d = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness
        return d

    def __repr__(self):  # pragma: no cover
        tag = "ok" if self.passed else "FAIL"
        return "Check(%s %s%s)" % (self.name, tag,
                                   " %s" % self.witness if self.witness else "")


class Report:
    def __init__(self, checks=None):
        self.checks = list(checks) if checks else []

    def ok(self, name):
        self.checks.append(Check(name, True))

    def fail(self, name, witness):
        self.checks.append(Check(name, False, witness))

    def add(self, name, passed, witness=None):
        self.checks.append(Check(name, passed, witness if not passed else None))

    def extend(self, other):
        self.checks.extend(other.checks)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def first_failure(self):
        for c in self.checks:
            if not c.passed:
                return c
        return None

    def to_dict(self):
        return {"passed": self.passed,
                "checks": [c.to_dict() for c in self.checks]}
