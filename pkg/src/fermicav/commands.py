import logging
from typing import List, Optional

from .errors import ToleranceError
from .op import OP
from .opio import OPIO, OPIOSign, Parameter
from .scenario import ScenarioConfig
from .sweep import SweepResult, run_figure2, run_figure3, run_report
from .utils import write_csv
from .validate import Check, run_checks

logger = logging.getLogger(__name__)

CHECK_COLUMNS = ("check", "passed", "value", "limit")


class SweepOP(OP):
    """
    Run a sweep, write its CSV and metadata sidecar, and fail when a row's
    discrepancy exceeds its limit
    """
    name = None

    @classmethod
    def get_input_sign(cls):
        return OPIOSign({
            "config": Parameter(ScenarioConfig),
            "out": Parameter(Optional[str], help="output CSV path, "
                             "overrides the config", default=None),
        })

    @classmethod
    def get_output_sign(cls):
        return OPIOSign({
            "result": Parameter(SweepResult),
            "path": Parameter(Optional[str]),
        })

    @staticmethod
    def run(cfg: ScenarioConfig) -> SweepResult:
        raise NotImplementedError

    @OP.exec_sign_check
    def execute(
            self,
            op_in: OPIO,
    ) -> OPIO:
        cfg = op_in["config"]
        cfg.apply()
        result = self.run(cfg)
        self.progress_total = len(result)
        self.progress_current = len(result)
        path = op_in["out"] if op_in["out"] is not None else cfg["out"]
        if path is not None:
            result.write(path)
        breaches = result.breaches()
        if breaches:
            raise ToleranceError(
                "%d of %d %s rows exceed the admitted discrepancy, first at "
                "row %d" % (len(breaches), len(result), self.name,
                            breaches[0]))
        return OPIO({"result": result, "path": path})


class Figure2(SweepOP):
    """Single-segment degradation coefficient over one period for several
    boundary offsets and modes"""
    name = "figure2"
    run = staticmethod(run_figure2)


class Figure3(SweepOP):
    """One-way trip degradation coefficient over the (u, v) square"""
    name = "figure3"
    run = staticmethod(run_figure3)


class Report(SweepOP):
    """Closed form and density-matrix evaluation of one scenario"""
    name = "report"
    run = staticmethod(run_report)


class Validate(OP):
    """Run the invariant suite"""

    @classmethod
    def get_input_sign(cls):
        return OPIOSign({
            "names": Parameter(Optional[List[str]], help="checks to run, all "
                               "by default", default=None),
            "out": Parameter(Optional[str], help="output CSV path",
                             default=None),
        })

    @classmethod
    def get_output_sign(cls):
        return OPIOSign({
            "checks": Parameter(List[Check]),
            "path": Parameter(Optional[str]),
        })

    @OP.exec_sign_check
    def execute(
            self,
            op_in: OPIO,
    ) -> OPIO:
        checks = run_checks(op_in["names"])
        path = op_in["out"]
        if path is not None:
            write_csv(path, CHECK_COLUMNS, [c.to_row() for c in checks])
        failed = [c.name for c in checks if not c.passed]
        if failed:
            raise ToleranceError("%d of %d checks failed: %s" % (
                len(failed), len(checks), ", ".join(failed)))
        return OPIO({"checks": checks, "path": path})
