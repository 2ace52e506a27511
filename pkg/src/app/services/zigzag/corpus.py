"""
Acceptance run over the bundled corpus.

Each corpus entry yields one row per degree (groups and certificates) and a
handful of structural checks. A failure in one entry is logged and reported
as a failed row; it never stops the run.
"""

from __future__ import annotations

import random
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np
from sympy.combinatorics import Permutation

from .common.decorators import ErrorStrategy, handle_zigzag_exceptions
from .common.exceptions import CertificationFailure
from .common.logger import logger
from .core.cech import cone_lemma_holds, iterated_chase_bruteforce, iterated_chase_closed_form, palindromic_sign
from .core.cover import datum_violations
from .core.exactness import exactness_report
from .core.orders import check_order_independence
from .core.simplicial import Simplex
from .core.zint import identity, int_matrix, matmul, smith_normal_form
from ._workbench import Workspace, ZigzagWorkbench
from .models.reports import CheckRecord, CorpusRecord, Status


@dataclass
class CorpusReport:
    rows: list[CorpusRecord] = field(default_factory=list)
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row.status is Status.PASS for row in self.rows) and all(
            check.status is not Status.FAIL for check in self.checks if not check.informational
        )

    @property
    def certification_failed(self) -> bool:
        return any(row.certificates.startswith("failed") for row in self.rows)


def _status(ok: bool) -> Status:
    return Status.PASS if ok else Status.FAIL


@handle_zigzag_exceptions(ErrorStrategy.RETURN_NONE)
def _guarded[T](step: Callable[[], T]) -> T:
    return step()


class CorpusRunner:
    """Runs every acceptance check the corpus supports."""

    def __init__(self, workbench: ZigzagWorkbench) -> None:
        self.workbench = workbench
        self.settings = workbench.settings

    def run(self) -> CorpusReport:
        report = CorpusReport()
        report.checks.extend(self.substrate_checks())
        for path in self.workbench.corpus_files():
            ws = _guarded(lambda: self.workbench.workspace(path))
            if ws is None:
                report.checks.append(CheckRecord(space=path.stem, check="load", status=Status.FAIL))
                continue
            self.run_entry(ws, report)
        logger.info(f"corpus: {len(report.rows)} rows, {len(report.checks)} checks, passed={report.passed}")
        return report

    def run_entry(self, ws: Workspace, report: CorpusReport) -> None:
        checks = [
            lambda: self.axioms_check(ws),
            lambda: self.cone_check(ws),
            lambda: self.closed_form_check(ws),
            lambda: self.exactness_check(ws),
        ]
        if ws.original is not None:
            checks.append(lambda: self.order_check(ws))
        exact = Status.PASS
        for check in checks:
            record = _guarded(check) or CheckRecord(space=ws.name, check="error", status=Status.FAIL)
            if record.check == "exactness":
                exact = record.status
            report.checks.append(record)
        for k in self.workbench.degrees(ws):
            row = _guarded(lambda: self.degree_row(ws, k, exact))
            if row is None:
                row = CorpusRecord(
                    space=ws.name, degree=k, cech="?", nerve="?", certificates="error",
                    exactness=exact, status=Status.FAIL,
                )
            report.rows.append(row)

    # --- rows -----------------------------------------------------------------

    def degree_row(self, ws: Workspace, k: int, exactness: Status) -> CorpusRecord:
        groups = self.workbench.groups(ws, k)
        certificates = self._certificates(ws, k)
        agree = groups.cech == groups.nerve and (groups.space is None or groups.space == groups.cech)
        ok = agree and not certificates.startswith("failed") and not certificates.startswith("error")
        return CorpusRecord(
            space=ws.name,
            degree=k,
            cech=str(groups.cech),
            nerve=str(groups.nerve),
            space_group=None if groups.space is None else str(groups.space),
            certificates=certificates,
            exactness=exactness,
            status=_status(ok and exactness is Status.PASS),
        )

    def _certificates(self, ws: Workspace, k: int) -> str:
        try:
            certificates = self.workbench.certify(ws, k)
        except CertificationFailure as e:
            logger.error(f"certification failed on {ws.name} in degree {k}: {e}")
            return "failed"
        except Exception as e:
            logger.exception(f"error while certifying {ws.name} in degree {k}: {e}")
            return "error"
        verified = sum(1 for c in certificates if c.all_checked)
        return f"{verified}/{len(certificates)}"

    # --- checks ---------------------------------------------------------------

    def axioms_check(self, ws: Workspace) -> CheckRecord:
        problems = datum_violations(ws.datum)
        return CheckRecord(space=ws.name, check="axioms", status=_status(not problems), detail="; ".join(problems[:3]))

    def cone_check(self, ws: Workspace) -> CheckRecord:
        failing = [i for i in ws.datum.indices if not cone_lemma_holds(ws.datum, Simplex((i,)))]
        return CheckRecord(space=ws.name, check="cone lemma", status=_status(not failing), detail=" ".join(failing))

    def closed_form_check(self, ws: Workspace) -> CheckRecord:
        d = ws.datum
        top = self.settings.chase.ORACLE_MAX_DIMENSION
        checked, failing = 0, []
        for b in d.nerve:
            if b.dim > top:
                break
            checked += 1
            if iterated_chase_closed_form(d, b) != iterated_chase_bruteforce(d, b):
                failing.append(str(b))
        detail = f"{checked} simplices" if not failing else " ".join(failing[:5])
        return CheckRecord(space=ws.name, check="closed form", status=_status(not failing), detail=detail)

    def exactness_check(self, ws: Workspace) -> CheckRecord:
        report = exactness_report(ws.datum, self.settings.checks.EXACTNESS_MAX_TOTAL_DEGREE)
        detail = f"{len(report.entries)} positions"
        if report.failures:
            first = report.failures[0]
            detail = f"{first.axis} {first.key} at {first.position}: {first.invariants}"
        return CheckRecord(space=ws.name, check="exactness", status=_status(report.exact), detail=detail)

    def order_check(self, ws: Workspace) -> CheckRecord:
        if ws.original is None:
            return CheckRecord(space=ws.name, check="order independence", status=Status.SKIP, informational=True)
        trials, seed = self.settings.checks.ORDER_TRIALS, self.settings.SEED
        agreeing, total = 0, 0
        for k in self.workbench.degrees(ws):
            for trial in check_order_independence(ws.original, k, trials, seed):
                agreeing += trial.cohomologous
                total += trial.generators
        return CheckRecord(
            space=ws.name,
            check="order independence",
            status=_status(agreeing == total),
            detail=f"{agreeing}/{total} chases cohomologous",
            informational=True,
        )

    def substrate_checks(self) -> list[CheckRecord]:
        records = [self._sign_table_check()]
        records.append(_guarded(self._smith_check) or CheckRecord(space="-", check="smith form", status=Status.FAIL))
        return records

    def _sign_table_check(self) -> CheckRecord:
        top = self.settings.chase.MAX_DEGREE
        table = [palindromic_sign(k) for k in range(top + 1)]
        reference = [Permutation(list(range(k, -1, -1))).signature() for k in range(top + 1)]
        return CheckRecord(
            space="-",
            check="palindromic sign",
            status=_status(table == reference),
            detail=" ".join(f"{s:+d}" for s in table),
        )

    def _smith_check(self) -> CheckRecord:
        rng = random.Random(self.settings.SEED)
        samples = self.settings.checks.RANDOM_SAMPLES
        bad = 0
        for _ in range(samples):
            rows, cols = rng.randint(1, 12), rng.randint(1, 12)
            a = int_matrix([[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)])
            snf = smith_normal_form(a)
            diagonal = snf.invariant_factors
            chained = all(b % a_ == 0 for a_, b in zip(diagonal, diagonal[1:], strict=False))
            unimodular = np.array_equal(matmul(snf.u_inverse, snf.U), identity(rows)) and np.array_equal(
                matmul(snf.V, snf.v_inverse), identity(cols)
            )
            if not (np.array_equal(matmul(matmul(snf.U, a), snf.V), snf.D) and chained and unimodular):
                bad += 1
        return CheckRecord(
            space="-", check="smith form", status=_status(bad == 0), detail=f"{samples - bad}/{samples} random matrices"
        )
