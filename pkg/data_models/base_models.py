"""
Database handle and the base class of persisted records
"""

import logging
from datetime import datetime

from flask_sqlalchemy import SQLAlchemy
from sqlalchemy.orm import declared_attr

logger = logging.getLogger(__name__)

db = SQLAlchemy()


class TimestampMixin:
    created_at = db.Column(db.DateTime, default=datetime.utcnow, nullable=False)


class BaseModel(db.Model):
    """Abstract record with an integer key and a lower-case table name"""

    __abstract__ = True

    id = db.Column(db.Integer, primary_key=True)

    @declared_attr
    def __tablename__(cls):
        return cls.__name__.lower()

    def save(self) -> bool:
        """Commit the record; False (and a rollback) when the database refuses it"""
        try:
            db.session.add(self)
            db.session.commit()
            return True
        except Exception as e:
            db.session.rollback()
            logger.error(f"[ERROR] Storing {self.__class__.__name__} failed: {e}")
            return False

    @classmethod
    def get_by_id(cls, record_id: int):
        return db.session.get(cls, record_id)

    @classmethod
    def count(cls) -> int:
        return cls.query.count()

    def __repr__(self):
        return f"<{self.__class__.__name__}(id={self.id})>"
