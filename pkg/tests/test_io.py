import json
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import schwartz_functions, small_primes
from padicwave.io import (
    FunctionFileError,
    coefficients_csv,
    function_from_dict,
    function_to_dict,
    load_function,
    read_coefficients_csv,
    save_function,
)
from padicwave.schwartz import unit_ball_indicator
from padicwave.wavelets import WaveletIndex, basis_wavelet, coefficient_table


def test_omega_file_round_trip(tmp_path):
    path = tmp_path / "omega.json"
    save_function(unit_ball_indicator(3), path)
    assert load_function(path) == unit_ball_indicator(3)


@given(small_primes.flatmap(lambda p: schwartz_functions(p)))
def test_dict_round_trip(f):
    g = function_from_dict(json.loads(json.dumps(function_to_dict(f))))
    assert g.scale == f.scale and dict(g.cells) == dict(f.cells)


def test_rejects_duplicate_ball():
    data = {"p": 2, "scale": 1, "cells": [{"center": "1", "value": [1, 0]},
                                          {"center": "3", "value": [2, 0]}]}
    with pytest.raises(FunctionFileError, match="#0 .* #1 .*same ball"):
        function_from_dict(data)


@pytest.mark.parametrize("data", [
    {"scale": 0, "cells": []},
    {"p": 4, "scale": 0, "cells": []},
    {"p": 2, "scale": 0, "cells": [{"center": "0"}]},
    {"p": 2, "scale": 0, "cells": [{"center": "0", "value": "x"}]},
])
def test_rejects_malformed(data):
    with pytest.raises(ValueError):
        function_from_dict(data)


def test_invalid_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{")
    with pytest.raises(FunctionFileError, match="invalid JSON"):
        load_function(path)


def test_coefficients_csv_round_trip():
    f = basis_wavelet(WaveletIndex.of(1, Fraction(1, 3), 2, 3)) + unit_ball_indicator(3)
    table = coefficient_table(f, -1, 2)
    rows = read_coefficients_csv(coefficients_csv(table))
    assert len(rows) == len(table)
    for row, (idx, c) in zip(rows, table):
        assert (row["gamma"], row["j"]) == (idx.gamma, idx.j)
        assert row["coeff"] == c      # 17 significant digits round-trip exactly


def test_empty_table_csv_has_header_only():
    text = coefficients_csv(coefficient_table(unit_ball_indicator(2), 1, 0))
    assert text == "gamma,n_literal,j,coeff_re,coeff_im\n"
