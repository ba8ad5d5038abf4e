"""
Stored verification runs
"""

import json
from typing import Any, Dict, List

from data_models.base_models import BaseModel, TimestampMixin, db


class VerificationRun(BaseModel, TimestampMixin):
    """One persisted invocation of a verification suite"""

    suite = db.Column(db.String(40), nullable=False, index=True)
    parameters = db.Column(db.Text, nullable=False, default="{}")
    passed_count = db.Column(db.Integer, nullable=False, default=0)
    failed_count = db.Column(db.Integer, nullable=False, default=0)
    report = db.Column(db.Text, nullable=False, default="{}")

    def get_parameters(self) -> Dict[str, Any]:
        return json.loads(self.parameters or "{}")

    def get_report(self) -> Dict[str, Any]:
        return json.loads(self.report or "{}")

    @classmethod
    def get_recent(cls, limit: int = 20) -> List["VerificationRun"]:
        return cls.query.order_by(cls.created_at.desc(), cls.id.desc()).limit(limit).all()

    @classmethod
    def get_by_suite(cls, suite: str) -> List["VerificationRun"]:
        return cls.query.filter_by(suite=suite).order_by(cls.id.desc()).all()

    def to_summary(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "suite": self.suite,
            "parameters": self.get_parameters(),
            "passed": self.passed_count,
            "failed": self.failed_count,
            "created_at": self.created_at.isoformat() if self.created_at else None,
        }
