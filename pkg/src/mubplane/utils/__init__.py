"""Ambient helpers: configuration, error display, logging and output."""
