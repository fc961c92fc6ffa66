import argparse
import logging

import pytest

from tc_algebra import input_validator
from tc_algebra.operad import Partition, Perm


def test_positive_and_non_negative_integers():
    assert input_validator.positive_int("3") == 3
    assert input_validator.non_negative_int("0") == 0
    with pytest.raises(argparse.ArgumentTypeError):
        input_validator.positive_int("0")
    with pytest.raises(argparse.ArgumentTypeError):
        input_validator.non_negative_int("-1")
    with pytest.raises(argparse.ArgumentTypeError):
        input_validator.positive_int("1.5")


def test_names_are_case_insensitive():
    assert input_validator.backend_name("CEND") == "cend"
    assert input_validator.variety_name(" Assoc ") == "assoc"
    assert input_validator.ring_name("laurent") == "laurent"
    with pytest.raises(argparse.ArgumentTypeError):
        input_validator.backend_name("vertex")
    with pytest.raises(argparse.ArgumentTypeError):
        input_validator.variety_name("lie")


def test_log_levels():
    assert input_validator.log_level("info") == logging.INFO
    with pytest.raises(argparse.ArgumentTypeError):
        input_validator.log_level("loud")


@pytest.mark.parametrize("text", ["[2,1,3]", "2,1,3", "2 1 3"])
def test_permutations_in_one_line_notation(text):
    assert input_validator.permutation(text) == Perm([2, 1, 3])


@pytest.mark.parametrize("text", ["[]", "[1,1]", "[0,1]", "[1,a]"])
def test_malformed_permutations(text):
    with pytest.raises(argparse.ArgumentTypeError):
        input_validator.permutation(text)


def test_partitions():
    assert input_validator.partition("[2,1]") == Partition([2, 1])
    with pytest.raises(argparse.ArgumentTypeError):
        input_validator.partition("[2,0]")
