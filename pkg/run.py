#!/usr/bin/env python
"""Convenience script to run the command-line tool."""

from spinfermion.main import main

if __name__ == "__main__":
    main()
