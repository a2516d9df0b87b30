"""Built-in verification checks, loaded by file like external ones."""
