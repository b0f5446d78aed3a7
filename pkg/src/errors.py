# -*- coding: utf-8 -*-
"""
Shared error codes, exceptions and error-payload helpers.
"""

from typing import Any, Dict, Optional

from .logger import logger


NON_NORMALIZED = "non_normalized"
NEGATIVE_LOCATION = "negative_location"
NEGATIVE_MASS = "negative_mass"
NON_CANONICAL = "non_canonical"
BAD_GRID = "bad_grid"
OUT_OF_UNIT_INTERVAL = "out_of_unit_interval"
NEGATIVE_INPUT = "negative_input"
NON_LEFT_CONTINUOUS_SCALAR = "non_left_continuous_scalar"
NOT_L_DECOMPOSABLE = "not_l_decomposable"
INPUT_NOT_MEASURE = "input_not_measure"
NOT_DISTRIBUTIVE = "not_distributive"
DOMINANCE_UNVERIFIED = "dominance_unverified"
INPUT_NOT_ANTIMONOTONE_SUBMEASURE = "input_not_antimonotone_submeasure"
POINT_SET_MISMATCH = "point_set_mismatch"
PRODUCT_TOO_LARGE = "product_too_large"
EMPTY_SET = "empty_set"
NOT_PROB_BOUNDED = "not_prob_bounded"
UNIVERSE_TOO_LARGE = "universe_too_large"
CONFIG_PARSE = "config_parse"
SUITE_UNKNOWN = "suite_unknown"
BUDGET_EXHAUSTED = "budget_exhausted"
IO_FAILURE = "io_failure"


class PMMeasError(Exception):
    """Base error. Carries a stable code and, where useful, a witness."""

    code = "pmmeas_error"

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.witness = witness


class NonNormalizedError(PMMeasError):
    code = NON_NORMALIZED


class NegativeLocationError(PMMeasError):
    code = NEGATIVE_LOCATION


class NegativeMassError(PMMeasError):
    code = NEGATIVE_MASS


class NonCanonicalError(PMMeasError):
    """Atoms not strictly increasing in location."""
    code = NON_CANONICAL


class BadGridError(PMMeasError):
    code = BAD_GRID


class OutOfUnitIntervalError(PMMeasError):
    code = OUT_OF_UNIT_INTERVAL


class NegativeInputError(PMMeasError):
    code = NEGATIVE_INPUT


class NonLeftContinuousScalarError(PMMeasError):
    code = NON_LEFT_CONTINUOUS_SCALAR


class NotLDecomposableError(PMMeasError):
    code = NOT_L_DECOMPOSABLE


class InputNotMeasureError(PMMeasError):
    code = INPUT_NOT_MEASURE


class NotDistributiveError(PMMeasError):
    code = NOT_DISTRIBUTIVE


class DominanceUnverifiedError(PMMeasError):
    code = DOMINANCE_UNVERIFIED


class InputNotAntimonotoneSubmeasureError(PMMeasError):
    code = INPUT_NOT_ANTIMONOTONE_SUBMEASURE


class PointSetMismatchError(PMMeasError):
    code = POINT_SET_MISMATCH


class ProductTooLargeError(PMMeasError):
    code = PRODUCT_TOO_LARGE


class EmptySetError(PMMeasError):
    code = EMPTY_SET


class NotProbBoundedError(PMMeasError):
    code = NOT_PROB_BOUNDED


class UniverseTooLargeError(PMMeasError):
    code = UNIVERSE_TOO_LARGE


class ConfigError(PMMeasError):
    code = CONFIG_PARSE


class SuiteUnknownError(ConfigError):
    code = SUITE_UNKNOWN


class BudgetExhaustedError(PMMeasError):
    code = BUDGET_EXHAUSTED


class IoFailureError(PMMeasError):
    code = IO_FAILURE


def error_payload(error: Exception) -> Dict[str, Any]:
    """
    Return a structured error payload for reports.
    """
    if isinstance(error, PMMeasError):
        payload = {
            "success": False,
            "error_code": error.code,
            "error": error.message,
        }
        if error.witness is not None:
            payload["witness"] = error.witness
        return payload

    return {
        "success": False,
        "error_code": "internal_error",
        "error": f"{type(error).__name__}: {error}",
    }


def log_error(error: Exception, context: Optional[str] = None) -> None:
    """
    Log an operator-friendly line for an error that is reported, not raised.
    """
    prefix = f"{context} failed" if context else "Operation failed"

    if isinstance(error, ConfigError):
        logger.error("%s: configuration problem (%s): %s", prefix, error.code, error.message)
        return

    if isinstance(error, PMMeasError):
        logger.error("%s (%s): %s", prefix, error.code, error.message)
        return

    logger.error("%s: %s", prefix, error, exc_info=error)
