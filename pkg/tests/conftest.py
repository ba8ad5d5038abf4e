import pytest

from app import create_app
from business_services import BadcService
from config import LabSettings, TestingConfig
from data_models.base_models import db


@pytest.fixture
def settings():
    return LabSettings.from_object(TestingConfig)


@pytest.fixture
def app():
    application = create_app('testing')
    yield application
    with application.app_context():
        db.session.remove()
        db.drop_all()


@pytest.fixture
def client(app):
    return app.test_client()


@pytest.fixture
def double_cycle():
    """Factory for canonical double-cycles: double_cycle('negative', 3, 2)"""
    return BadcService.build_double_cycle


@pytest.fixture
def config_of():
    """Factory turning pair notation into a Configuration for a double-cycle"""
    def parse(dc, text):
        return BadcService.parse_configuration(text, dc.spec)
    return parse
