"""
WSGI entry point for serving wspec with Gunicorn.

Forces the production environment (JSON logs, no CORS) before the app is
created.
"""

import os

from wspec.config import ENVIRONMENT_VARIABLE

os.environ[ENVIRONMENT_VARIABLE] = "production"

from wspec import create_app  # noqa: E402  pylint: disable=wrong-import-position

app = create_app("wspec.config.ProductionConfig")

if __name__ == "__main__":
    app.run()
