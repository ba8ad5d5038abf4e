"""
BOOLEAN AUTOMATA DOUBLE-CYCLE LABORATORY
========================================

Flask application exposing the laboratory's services as a JSON API.

ORGANIZATION:
1. IMPORTS AND SETUP
2. LOGGING CONFIGURATION
3. APPLICATION FACTORY
4. REQUEST HELPERS
5. ROUTES (dynamics, sequences, verification, system)
6. ERROR HANDLERS
7. APPLICATION ENTRY POINT

Version: 1.0.0
License: MIT
"""

# =============================================================================
# 1. IMPORTS AND SETUP
# =============================================================================

import logging
import os
import sys
from datetime import datetime
from typing import Any, List, Optional

from flask import Flask, current_app, jsonify, request
from sqlalchemy import text
from werkzeug.exceptions import HTTPException
from werkzeug.middleware.proxy_fix import ProxyFix

from business_services import (
    BadcService, DynamicsService, ReportService, SequenceService, VerificationService
)
from config import LabSettings, get_config
from data_models.base_models import db
from helper_utilities.constants import LabConstants, Suite
from helper_utilities.exceptions import InvalidSizeError, LabError
from helper_utilities.formatters import SignFormatter, TraceFormatter
from helper_utilities.validators import SizeValidator

# =============================================================================
# 2. LOGGING CONFIGURATION
# =============================================================================

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(config_class) -> logging.Logger:
    """
    Configure the root logger once: stderr always, a UTF-8 log file when
    LOG_FILE is set. Later calls only adjust the level.
    """
    log_level = (getattr(config_class, 'LOG_LEVEL', None) or 'INFO').strip().upper()
    if not isinstance(getattr(logging, log_level, None), int):
        log_level = 'INFO'

    root_logger = logging.getLogger()
    root_logger.setLevel(getattr(logging, log_level))
    if getattr(root_logger, '_lab_configured', False):
        return logging.getLogger(__name__)

    formatter = logging.Formatter(LOG_FORMAT)
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    log_file = getattr(config_class, 'LOG_FILE', None)
    if log_file:
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)

    root_logger._lab_configured = True
    return logging.getLogger(__name__)


logger = logging.getLogger(__name__)

# =============================================================================
# 3. APPLICATION FACTORY
# =============================================================================


def create_app(config_name: Optional[str] = None) -> Flask:
    """Build the application for a named configuration (FLASK_ENV by default)"""
    config_class = get_config(config_name)
    setup_logging(config_class)

    app = Flask(__name__)
    app.config.from_object(config_class)
    app.wsgi_app = ProxyFix(app.wsgi_app, x_proto=1, x_host=1)

    db.init_app(app)
    with app.app_context():
        db.create_all()

    register_routes(app)
    register_error_handlers(app)
    logger.info(f"[STARTUP] {app.config['APP_NAME']} {app.config['APP_VERSION']} ({config_class.__name__})")
    return app

# =============================================================================
# 4. REQUEST HELPERS
# =============================================================================


def _settings() -> LabSettings:
    return LabSettings.from_object(current_app.config)


def _size(value: Any, name: str, minimum: int = 1) -> int:
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise InvalidSizeError(f"{name}={value!r} is not an integer")
    return SizeValidator(minimum).require(number, name)


def _sizes(value: Any, name: str) -> List[int]:
    """An integer, a list of integers or a comma-separated string; empty when absent"""
    if value is None or value == '':
        return []
    if isinstance(value, str):
        return SizeValidator().parse_list(value)
    if isinstance(value, list):
        return [_size(item, name) for item in value]
    return [_size(value, name)]


def _optional_int(value: Any, name: str) -> Optional[int]:
    if value is None or value == '':
        return None
    try:
        return int(value)
    except (TypeError, ValueError):
        raise LabError(f"{name}={value!r} is not an integer")


def _body() -> dict:
    data = request.get_json(silent=True)
    if not isinstance(data, dict):
        raise LabError("Request body must be a JSON object")
    return data


def _payload(data: dict) -> dict:
    payload = dict(data)
    payload['schemaVersion'] = current_app.config['JSON_SCHEMA_VERSION']
    return payload

# =============================================================================
# 5. ROUTES
# =============================================================================


def register_routes(app: Flask) -> None:

    @app.route('/api/attractors')
    def attractors():
        """Attractor report of a canonical double-cycle"""
        kind = BadcService.parse_kind(request.args.get('kind'))
        n = _size(request.args.get('n'), 'n')
        m = _size(request.args.get('m'), 'm')
        settings = _settings()
        dc = BadcService.build_double_cycle(kind, n, m)
        cap = min(settings.enumeration_cap, settings.api_enumeration_cap)
        graph = DynamicsService.build_graph(dc.network, cap, settings.graph_workers)
        return jsonify(_payload(DynamicsService.summarize(graph, kind.value, n, m)))

    @app.route('/api/run', methods=['POST'])
    def run_program():
        """Execute a program from a start configuration and return its trace"""
        data = _body()
        kind = BadcService.parse_kind(data.get('kind'))
        n = _size(data.get('n'), 'n')
        m = _size(data.get('m'), 'm')
        dc = BadcService.build_double_cycle(kind, n, m)
        start = BadcService.parse_configuration(data.get('start', ''), dc.spec)
        trace = SequenceService.exec(dc, start, data.get('program', ''),
                                     strict=bool(data.get('strict', _settings().expand_strict)))
        result = TraceFormatter.to_dict(trace, n, m)
        result.update({'kind': kind.value, 'n': n, 'm': m})
        return jsonify(_payload(result))

    @app.route('/api/canonicalize', methods=['POST'])
    def canonicalize():
        """Canonical kind and relabeling of a double-cycle with explicit arc signs"""
        data = _body()
        spec = BadcService.signed_spec(data.get('left_signs', ''), data.get('right_signs', ''))
        for name, expected, actual in (('n', data.get('n'), spec.n), ('m', data.get('m'), spec.m)):
            if expected is not None and _size(expected, name) != actual:
                raise LabError(f"{name}={expected} does not match the sign word length {actual}")
        summary = BadcService.canonical_summary(spec)
        summary['table'] = SignFormatter.flips_table(summary['flips'], summary['permutation'], spec.n)
        return jsonify(_payload(summary))

    @app.route('/api/verify', methods=['POST'])
    def verify():
        """Run one verification suite, optionally storing the result"""
        data = _body()
        try:
            suite = Suite((data.get('suite') or '').strip().lower())
        except ValueError:
            raise LabError(f"Unknown suite {data.get('suite')!r}; choose one of "
                           f"{', '.join(s.value for s in Suite)}")
        settings = _settings()
        report = VerificationService.run_suite(
            suite, settings,
            n_values=_sizes(data.get('n'), 'n'),
            m_values=_sizes(data.get('m'), 'm'),
            sizes=_sizes(data.get('sizes'), 'sizes'),
            seed=_optional_int(data.get('seed'), 'seed'),
            samples=_optional_int(data.get('samples'), 'samples'),
            max_n=_optional_int(data.get('max_n'), 'max_n'),
        )
        result = report.to_dict()
        result['suite'] = suite.value
        if data.get('save'):
            run = ReportService.save_run(report, suite.value, {k: v for k, v in data.items() if k != 'save'})
            result['runId'] = run.id if run is not None else None
        return jsonify(_payload(result)), 200

    @app.route('/api/runs')
    def runs():
        """Stored verification runs, newest first"""
        limit = request.args.get('limit', default=20, type=int)
        return jsonify(_payload({'runs': ReportService.list_runs(limit, request.args.get('suite'))}))

    @app.route('/api/runs/<int:run_id>')
    def run_detail(run_id: int):
        run = ReportService.get_run(run_id)
        if run is None:
            return jsonify({'success': False, 'error': f'No verification run #{run_id}'}), 404
        return jsonify(_payload(run))

    @app.route('/health')
    def health_check():
        """Health check endpoint for monitoring and deployment verification"""
        try:
            db.session.execute(text('SELECT 1'))
            return jsonify({
                'status': 'healthy',
                'timestamp': datetime.now().isoformat(),
                'database': 'connected',
                'storedRuns': ReportService.count_runs(),
                'version': current_app.config['APP_VERSION'],
                'schemaVersion': LabConstants.SCHEMA_VERSION,
            }), 200
        except Exception as e:
            logger.error(f"[ERROR] Health check failed: {e}")
            return jsonify({
                'status': 'unhealthy',
                'timestamp': datetime.now().isoformat(),
                'error': str(e)
            }), 500

# =============================================================================
# 6. ERROR HANDLERS
# =============================================================================


def register_error_handlers(app: Flask) -> None:

    @app.errorhandler(LabError)
    def lab_error(error):
        logger.warning(f"[WARNING] Rejected request to {request.path}: {error}")
        return jsonify({'success': False, 'error': str(error), 'type': type(error).__name__}), 400

    @app.errorhandler(HTTPException)
    def http_error(error):
        return jsonify({'success': False, 'error': error.description}), error.code

    @app.errorhandler(Exception)
    def internal_error(error):
        db.session.rollback()
        logger.exception(f"[ERROR] Unhandled error on {request.path}: {error}")
        return jsonify({'success': False, 'error': 'Internal server error'}), 500

# =============================================================================
# 7. APPLICATION ENTRY POINT
# =============================================================================


if __name__ == '__main__':
    application = create_app()
    port = int(os.environ.get('PORT', 5000))
    application.run(debug=application.config['DEBUG'], host='0.0.0.0', port=port)
