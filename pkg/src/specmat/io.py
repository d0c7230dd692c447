"""Matrix and result documents: the structured-text (JSON) wire format of
the command line tool.

A matrix document is {"order": k, "data": [[re, im], ...]} in row-major
order; bare numbers in "data" are promoted to [x, 0].
"""

import json

import numpy as np


class DocumentError(ValueError):
    """Malformed matrix document."""


def parse_matrix_document(text: str) -> np.ndarray:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "order" not in doc or "data" not in doc:
        raise DocumentError('expected an object with "order" and "data"')
    order = doc["order"]
    if not isinstance(order, int) or order < 1:
        raise DocumentError('"order" must be a positive integer')
    data = doc["data"]
    if not isinstance(data, list) or len(data) != order * order:
        raise DocumentError(f'"data" must hold {order * order} entries')
    values = []
    for entry in data:
        if isinstance(entry, (int, float)) and not isinstance(entry, bool):
            values.append(complex(entry, 0.0))
        elif (isinstance(entry, list) and len(entry) == 2
              and all(isinstance(x, (int, float)) and not isinstance(x, bool)
                      for x in entry)):
            values.append(complex(entry[0], entry[1]))
        else:
            raise DocumentError(f"bad matrix entry {entry!r}")
    matrix = np.array(values, dtype=complex).reshape(order, order)
    if not np.all(np.isfinite(matrix.view(float))):
        raise DocumentError("matrix entries must be finite")
    return matrix


def matrix_to_document(A: np.ndarray) -> dict:
    A = np.asarray(A, dtype=complex)
    return {
        "order": A.shape[0],
        "data": [[float(z.real), float(z.imag)] for z in A.ravel()],
    }


def result_document(operation, cs, result, diagnostics, version) -> dict:
    spec_echo = [
        {
            "alpha": [alpha.real, alpha.imag],
            "mult": mult,
            "index": cs.index[j],
        }
        for j, (alpha, mult) in enumerate(cs.spec.entries)
    ]
    return {
        "operation": operation,
        "input": {"order": cs.order, "spectrum": spec_echo},
        "result": matrix_to_document(result),
        "diagnostics": diagnostics,
        "version": version,
    }


def dump_document(doc: dict) -> str:
    # json round-trips doubles exactly (shortest-representation encoding)
    return json.dumps(doc, indent=2) + "\n"
