import pytest

from inv3sat import ModelSet, cnf_of

# The running example used across the golden tests: n=5, eight models,
# chosen so the pipeline finds the extra model 10111 behind prefix 1011.
WORKED_MODELS = (
    "00111",
    "01011",
    "10101",
    "11100",
    "11111",
    "10011",
    "01101",
    "00100",
)

# All twenty 3-clauses every worked model satisfies, frozen by hand from
# the triple-by-triple construction and cross-checked by the oracle.
WORKED_CANDIDATE = (
    (1, 2, 3),
    (-1, -2, 3),
    (1, -2, 5),
    (-1, 2, 5),
    (1, 3, 4),
    (-1, 3, 4),
    (1, 3, 5),
    (-1, 3, 5),
    (1, -4, 5),
    (-1, -4, 5),
    (2, 3, 4),
    (-2, 3, 4),
    (2, 3, 5),
    (-2, 3, 5),
    (2, -4, 5),
    (-2, -4, 5),
    (3, 4, 5),
    (3, 4, -5),
    (3, -4, 5),
    (-3, -4, 5),
)

# Fixpoint of the width-3 saturation of the candidate formula.
WORKED_CLOSURE = (
    (1, 2, 3),
    (1, -2, 5),
    (-1, 2, 5),
    (-1, -2, 3),
    (3, 4),
    (3, 5),
    (-4, 5),
)

WORKED_STRATUM_3 = ("000", "110")
WORKED_STRATUM_4 = ("0100", "1011", "1000", "0111")
WORKED_STRATUM_5 = (
    "00110",
    "01010",
    "10100",
    "11101",
    "11110",
    "10010",
    "01100",
    "00101",
)

# Assignments outside the worked model set that satisfy the candidate
# formula; computed by the enumeration oracle and frozen.
WORKED_EXTRAS = ("00101", "01111", "10111", "11101")

WORKED_WITNESS = "10111"


@pytest.fixture
def worked_models():
    return ModelSet(5, WORKED_MODELS)


@pytest.fixture
def worked_candidate():
    return cnf_of(5, WORKED_CANDIDATE)


@pytest.fixture
def worked_closure():
    return cnf_of(5, WORKED_CLOSURE)
