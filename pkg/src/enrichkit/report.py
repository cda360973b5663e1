"""Check reports: pass/fail plus concrete witnesses.

A witness pins down a failed diagram: the diagram family name, the tuple of
ids that instantiates it, and the two evaluated legs that should have been
the same identifier.  `None` legs (a composite that could not be evaluated)
are rendered as "<undefined>".
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field


def _fmt(value) -> str:
    return "<undefined>" if value is None else str(value)


@dataclass(frozen=True)
class Witness:
    diagram: str
    instance: tuple
    lhs: str
    rhs: str


@dataclass
class CheckReport:
    witnesses: list = field(default_factory=list)
    # diagram family -> number of instances evaluated (0 marks a vacuous family)
    families: dict = field(default_factory=dict)
    # non-fatal findings (e.g. a non-invertible associator component)
    warnings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.witnesses

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def first_for(self, family: str):
        for w in self.witnesses:
            if w.diagram == family:
                return w
        return None

    def failing_families(self) -> set:
        return {w.diagram for w in self.witnesses}

    def merge(self, other: "CheckReport", prefix: str = "") -> None:
        """Fold another report in, optionally namespacing its families."""
        for w in other.witnesses:
            self.witnesses.append(
                Witness(prefix + w.diagram, w.instance, w.lhs, w.rhs))
        for w in other.warnings:
            self.warnings.append(
                Witness(prefix + w.diagram, w.instance, w.lhs, w.rhs))
        for fam, count in other.families.items():
            key = prefix + fam
            self.families[key] = self.families.get(key, 0) + count


class ReportBuilder:
    """Accumulates one report, one diagram family at a time.

    Enumeration is deterministic: callers hand over instance lists already in
    lexicographic order.  With ``all_witnesses=False`` a family stops at its
    first failure.  With ``workers > 1`` the instance list is split into
    chunks evaluated on a thread pool; chunk results are merged in list order,
    so the reported first witness is the same as in the sequential scan.
    """

    def __init__(self, all_witnesses: bool = False, workers: int = 1):
        self.all_witnesses = all_witnesses
        self.workers = max(1, int(workers))
        self._report = CheckReport()

    def family(self, name: str, instances, check) -> None:
        """Evaluate ``check(instance) -> None | (lhs, rhs)`` over a family."""
        instances = list(instances)
        hits = (self._scan_parallel(instances, check)
                if self.workers > 1 and len(instances) > 64
                else self._scan_serial(instances, check))
        count = len(instances)
        if hits and not self.all_witnesses:
            first = hits[0]
            count = first[0] + 1
            hits = [first]
        for _, inst, lhs, rhs in hits:
            self._report.witnesses.append(
                Witness(name, tuple(inst), _fmt(lhs), _fmt(rhs)))
        self._report.families[name] = count

    def _scan_serial(self, instances, check):
        hits = []
        for idx, inst in enumerate(instances):
            res = check(inst)
            if res is not None:
                hits.append((idx, inst, res[0], res[1]))
                if not self.all_witnesses:
                    break
        return hits

    def _scan_parallel(self, instances, check):
        chunk = max(32, len(instances) // (self.workers * 4))
        spans = [(lo, instances[lo:lo + chunk])
                 for lo in range(0, len(instances), chunk)]

        def run(span):
            lo, items = span
            out = []
            for off, inst in enumerate(items):
                res = check(inst)
                if res is not None:
                    out.append((lo + off, inst, res[0], res[1]))
            return out

        hits = []
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            for part in pool.map(run, spans):
                hits.extend(part)
        return hits

    def vacuous(self, name: str) -> None:
        self._report.families[name] = 0

    def warn(self, name: str, instance, lhs, rhs) -> None:
        self._report.warnings.append(
            Witness(name, tuple(instance), _fmt(lhs), _fmt(rhs)))

    def merge(self, other: CheckReport, prefix: str = "") -> None:
        self._report.merge(other, prefix)

    def report(self) -> CheckReport:
        return self._report


def cached_report(obj, check) -> CheckReport:
    """Memoize a checker run on an immutable structure.

    Structures are frozen after construction, so the first full check is
    authoritative for the object's lifetime.
    """
    rep = getattr(obj, "_cached_report", None)
    if rep is None:
        rep = check(obj)
        object.__setattr__(obj, "_cached_report", rep)
    return rep
