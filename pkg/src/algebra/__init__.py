"""Exact monomial ideal algebra."""
