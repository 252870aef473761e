"""
test_init.py
------------
Tests for the Flask application factory and its JSON error handlers.
"""

from flask import Flask
from werkzeug.exceptions import BadRequest

import wspec


def test_create_app_returns_flask_app():
    application = wspec.create_app("wspec.config.TestingConfig")
    assert isinstance(application, Flask)
    assert application.config["TESTING"] is True


def test_main_runs(monkeypatch):
    called = {}

    def fake_run(self, debug):
        called["debug"] = debug

    monkeypatch.setattr("flask.Flask.run", fake_run)
    wspec.create_app("wspec.config.TestingConfig").run(debug=True)
    assert called == {"debug": True}


def test_cors_only_in_debug():
    dev = wspec.create_app("wspec.config.DevelopmentConfig")
    response = dev.test_client().get("/version", headers={"Origin": "http://x"})
    assert response.headers.get("Access-Control-Allow-Origin") == "*"

    prod = wspec.create_app("wspec.config.ProductionConfig")
    response = prod.test_client().get("/version", headers={"Origin": "http://x"})
    assert "Access-Control-Allow-Origin" not in response.headers


def test_handle_404(client):
    response = client.get("/no/such/route")
    assert response.status_code == 404
    assert response.get_json() == {
        "message": "Resource not found",
        "path": "/no/such/route",
        "method": "GET",
    }


def test_error_handler_400(app):
    @app.route("/bad")
    def bad():
        raise BadRequest()

    response = app.test_client().get("/bad")
    assert response.status_code == 400
    assert response.get_json()["message"] == "Bad request"


def test_error_handler_500(app):
    app.config["PROPAGATE_EXCEPTIONS"] = False

    @app.route("/fail")
    def fail():
        raise RuntimeError("fail!")

    response = app.test_client().get("/fail")
    assert response.status_code == 500
    data = response.get_json()
    assert data["message"] == "Internal server error"
    assert "exception" not in data
