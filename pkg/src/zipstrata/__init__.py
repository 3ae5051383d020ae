"""Combinatorics of zip-datum strata and positivity certificates for Hasse invariants."""

from .rootdata import RootDatum, build_root_datum, pair, product_root_datum
from .weyl import WeylElement, WeylGroup, weyl_group
from .zipdata import ZipDatum, StratumRecord, make_zip_datum, strata_table
from .frobenius import FrobeniusModel, h_inverse, h_map
from .hasse import HasseCertificate, hasse_certificate

__all__ = [
    "RootDatum", "build_root_datum", "pair", "product_root_datum",
    "WeylElement", "WeylGroup", "weyl_group",
    "ZipDatum", "StratumRecord", "make_zip_datum", "strata_table",
    "FrobeniusModel", "h_inverse", "h_map",
    "HasseCertificate", "hasse_certificate",
]
