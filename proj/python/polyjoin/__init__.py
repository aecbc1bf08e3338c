"""Cohomology of polyhedral products over polyhedral joins."""

import json as _json

from . import _polyjoin
from ._polyjoin import (
    Complex,
    FormatError,
    beta_compose as _beta_compose,
    beta_polynomial as _beta_polynomial,
    bbcg_series as _bbcg_series,
    caa_series as _caa_series,
    compose,
    csc_series as _csc_series,
    empty_series as _empty_series,
    hochster_betti,
    join,
    minimal_nonfaces,
    reduced_cohomology,
    rmac_betti,
    sr_compose,
    verify_formula,
    verify_paper,
)


def _doc(data):
    return data if isinstance(data, str) else _json.dumps(data)


def bbcg_series(k, pairs, mode="full", field="f2"):
    return _bbcg_series(k, _doc(pairs), mode, field)


def csc_series(k, ls, pairs, mode="full", field="f2"):
    return _csc_series(k, ls, _doc(pairs), mode, field)


def empty_series(k, ls, pairs, mode="full", field="f2"):
    return _empty_series(k, ls, _doc(pairs), mode, field)


def caa_series(k, ls, cohomology, field="f2", reduced=False):
    return _caa_series(k, ls, _doc(cohomology), field, reduced)


def beta_polynomial(k, cohomology, field="f2"):
    return _beta_polynomial(k, _doc(cohomology), field)


def beta_compose(k, ls, cohomology, field="f2"):
    return _beta_compose(k, ls, _doc(cohomology), field)


__all__ = [
    "Complex", "FormatError", "bbcg_series", "beta_compose", "beta_polynomial", "caa_series",
    "compose", "csc_series", "empty_series", "hochster_betti", "join", "minimal_nonfaces",
    "reduced_cohomology", "rmac_betti", "sr_compose", "verify_formula", "verify_paper",
]
