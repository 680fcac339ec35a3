"""Exact checks of Howe-type dualities on fermion Fock spaces."""

import json

from ._fockdual import ResourceLimit, oracle_multiplicities
from ._fockdual import weyl_dimension as _weyl_dimension
from . import _fockdual

__all__ = [
    "ResourceLimit",
    "verify",
    "enumerate_pairs",
    "pin_check",
    "ph_check",
    "weyl_dimension",
    "oracle_multiplicities",
]


def verify(d, k, duality, family="", mode_limit=0):
    return json.loads(_fockdual.verify_json(d, k, duality, family, mode_limit))


def enumerate_pairs(d, k, duality, family=""):
    return json.loads(_fockdual.enumerate_json(d, k, duality, family))


def pin_check(d, k):
    return json.loads(_fockdual.pin_check_json(d, k))


def ph_check(l, k=2):
    return json.loads(_fockdual.ph_check_json(l, k))


def weyl_dimension(family, entries):
    return int(_weyl_dimension(family, [str(e) for e in entries]))
