"""Generators, oracles, verification and file I/O."""
