"""
Report service for storing and listing verification runs
"""

import json
import logging
from typing import Any, Dict, List, Optional

from data_models.report_models import VerificationReport
from data_models.run_models import VerificationRun

logger = logging.getLogger(__name__)


class ReportService:
    """Service class for verification history; callers provide the app context"""

    @staticmethod
    def save_run(report: VerificationReport, suite: str,
                 parameters: Optional[Dict[str, Any]] = None) -> Optional[VerificationRun]:
        run = VerificationRun(
            suite=suite,
            parameters=json.dumps(parameters or {}, sort_keys=True),
            passed_count=report.passed_count,
            failed_count=report.failed_count,
            report=json.dumps(report.to_dict(), sort_keys=True),
        )
        if not run.save():
            logger.error(f"[ERROR] Could not store the {suite} verification run")
            return None
        logger.info(f"[SUCCESS] Stored {suite} verification run #{run.id}")
        return run

    @staticmethod
    def list_runs(limit: int = 20, suite: Optional[str] = None) -> List[Dict[str, Any]]:
        """Stored runs, newest first"""
        if suite:
            runs = VerificationRun.get_by_suite(suite)[:limit]
        else:
            runs = VerificationRun.get_recent(limit)
        return [run.to_summary() for run in runs]

    @staticmethod
    def count_runs() -> int:
        return VerificationRun.count()

    @staticmethod
    def get_run(run_id: int) -> Optional[Dict[str, Any]]:
        run = VerificationRun.get_by_id(run_id)
        if run is None:
            return None
        summary = run.to_summary()
        summary["report"] = run.get_report()
        return summary
