"""Marshmallow schemas for reports and HTTP payloads."""
