"""File formats: function files (JSON), classifications (JSON), coefficient tables (CSV)."""
from __future__ import annotations

import csv
import io
import json
from typing import Any

from .padic import PAdicError, check_prime, format_literal, parse_padic
from .schwartz import SchwartzFunction, residue_of
from .wavelets import Classification, CoefficientTable


class FunctionFileError(ValueError):
    pass


def fmt_float(x: float) -> str:
    return f"{x:.17g}"


def function_from_dict(data: dict[str, Any]) -> SchwartzFunction:
    try:
        p = check_prime(int(data["p"]))
        scale = int(data["scale"])
        raw = data["cells"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FunctionFileError(f"malformed function file: {exc}") from exc
    cells: dict = {}
    seen: dict = {}
    for i, cell in enumerate(raw):
        try:
            x = parse_padic(str(cell["center"]), p)
            re_, im_ = cell["value"]
            value = complex(float(re_), float(im_))
        except (KeyError, TypeError, ValueError) as exc:
            raise FunctionFileError(f"malformed cell #{i}: {cell!r} ({exc})") from exc
        c = residue_of(x, p, scale)
        if c in seen:
            j = seen[c]
            raise FunctionFileError(
                f"cells #{j} ({raw[j]['center']}) and #{i} ({cell['center']}) "
                f"describe the same ball {c} + {p}^{scale} Z_{p}")
        seen[c] = i
        cells[c] = value
    return SchwartzFunction(p, scale, cells)


def function_to_dict(f: SchwartzFunction) -> dict[str, Any]:
    return {
        "p": f.prime,
        "scale": f.scale,
        "cells": [{"center": format_literal(c), "value": [v.real, v.imag]}
                  for c, v in f.cells.items()],
    }


def load_function(path) -> SchwartzFunction:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise FunctionFileError(f"{path}: invalid JSON ({exc})") from exc
    try:
        return function_from_dict(data)
    except PAdicError as exc:
        raise FunctionFileError(f"{path}: {exc}") from exc


def save_function(f: SchwartzFunction, path) -> None:
    with open(path, "w") as fh:
        json.dump(function_to_dict(f), fh, indent=2)
        fh.write("\n")


def classification_to_dict(c: Classification) -> dict[str, Any]:
    return {
        "gamma": c.index.gamma,
        "n": format_literal(c.index.n),
        "j": c.index.j,
        "phase_num": c.phase.numerator,
        "phase_den": c.phase.denominator,
    }


COEFF_COLUMNS = ("gamma", "n_literal", "j", "coeff_re", "coeff_im")


def coefficients_csv(table: CoefficientTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COEFF_COLUMNS)
    for idx, c in table.entries:
        w.writerow([idx.gamma, format_literal(idx.n), idx.j, fmt_float(c.real), fmt_float(c.imag)])
    return buf.getvalue()


def read_coefficients_csv(text: str) -> list[dict[str, Any]]:
    rows = []
    for row in csv.DictReader(io.StringIO(text)):
        rows.append({"gamma": int(row["gamma"]), "n": row["n_literal"], "j": int(row["j"]),
                     "coeff": complex(float(row["coeff_re"]), float(row["coeff_im"]))})
    return rows


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, shortest round-trip floats."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
