"""Exact verification engine for the degree classification of conic bundles in P^4."""

from .certify import Certificate, CaseLeaf, run_full_verification, serialize_certificate

__version__ = "0.1.0"

__all__ = ["Certificate", "CaseLeaf", "run_full_verification", "serialize_certificate"]
