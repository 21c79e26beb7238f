"""Covering systems, the distortion method, and rigorous constant reproduction.

Thin wrapper re-exporting the compiled extension; exact rationals cross the
boundary as "p/q" strings, interval enclosures as (lower, upper) pairs.
"""

from _covering_lab import *  # noqa: F401,F403
