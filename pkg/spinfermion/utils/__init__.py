"""Utility modules for spinfermion."""
