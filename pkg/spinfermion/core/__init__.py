"""Core functionality for spinfermion."""
