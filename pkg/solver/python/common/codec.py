"""
JSON documents and CSV reports.

Numbers travel as decimal strings and are parsed exactly into rationals. On output, values whose decimal
expansion terminates within the configured number of significant digits are written exactly; all other
values are rounded to that many significant digits. Documents carry a top-level "format" field and are
written with sorted keys so that identical inputs give identical bytes.
"""

import json
import logging
import os.path
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any

import pandas as pd

from .. import config, env
from ..exceptions import DomainError, SchemaError
from ..models.graph import Edge, StarGraph
from ..models.measure import EdgeMeasure, GraphMeasure, PointMass
from ..models.spectral import CouplingMatrix, SpectralData


logger = logging.getLogger(__name__)


def parse_decimal(value: Any, path: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, str | int):
        raise SchemaError(f"Expected a decimal string, got {type(value).__name__}", path=path)
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as err:
        raise SchemaError(f"Invalid decimal {value!r}", path=path) from err


def format_decimal(value: Fraction, digits: int | None = None) -> str:
    digits = env.serialization_digits if digits is None else digits
    if digits < 1:
        raise DomainError(f"Serialization digits must be at least 1, got {digits}", code="invalid_digits")
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    with localcontext() as ctx:
        ctx.prec = digits
        rounded = Decimal(value.numerator) / Decimal(value.denominator)
    text = format(rounded.normalize(), "f")
    return text


def _field(document: dict, key: str, path: str, kind: type | tuple[type, ...]) -> Any:
    if not isinstance(document, dict):
        raise SchemaError("Expected an object", path=path)
    if key not in document:
        raise SchemaError(f"Missing field {key!r}", path=f"{path}.{key}")
    value = document[key]
    if not isinstance(value, kind):
        raise SchemaError(f"Field {key!r} has the wrong type {type(value).__name__}", path=f"{path}.{key}")
    return value


def _domain(path: str, build):
    try:
        return build()
    except DomainError as err:
        raise SchemaError(err.detail["detail"], path=path, code=err.code) from err


def _graph(edges: list, path: str) -> StarGraph:
    parsed = []
    for i, edge in enumerate(edges):
        edge_path = f"{path}[{i}]"
        eid = _field(edge, "id", edge_path, str)
        length = parse_decimal(_field(edge, "length", edge_path, (str, int)), f"{edge_path}.length")
        parsed.append(Edge(eid, length))
    return _domain(path, lambda: StarGraph(tuple(parsed)))


def measure_from_document(document: dict) -> GraphMeasure:
    edges = _field(document, "edges", "$", list)
    graph = _graph(edges, "$.edges")
    edge_measures = {}
    for i, edge in enumerate(edges):
        masses = []
        for j, mass in enumerate(edge.get("masses", [])):
            mass_path = f"$.edges[{i}].masses[{j}]"
            masses.append(
                PointMass(
                    parse_decimal(_field(mass, "x", mass_path, (str, int)), f"{mass_path}.x"),
                    parse_decimal(_field(mass, "m", mass_path, (str, int)), f"{mass_path}.m"),
                )
            )
        edge_measures[edge["id"]] = _domain(f"$.edges[{i}].masses", lambda masses=masses: EdgeMeasure(tuple(masses)))
    central = parse_decimal(document.get("central_mass", "0"), "$.central_mass")
    return _domain("$", lambda: GraphMeasure(graph, central, edge_measures))


def measure_to_document(measure: GraphMeasure, digits: int | None = None) -> dict:
    return {
        "format": config.document_format,
        "central_mass": format_decimal(measure.central_mass, digits),
        "edges": [
            {
                "id": edge.id,
                "length": format_decimal(edge.length, digits),
                "masses": [
                    {"x": format_decimal(m.position, digits), "m": format_decimal(m.weight, digits)}
                    for m in measure.on(edge.id)
                ],
            }
            for edge in measure.graph.edges
        ],
    }


def _values(document: Any, path: str) -> tuple[Fraction, ...]:
    if not isinstance(document, list):
        raise SchemaError("Expected a list of decimal strings", path=path)
    return tuple(parse_decimal(value, f"{path}[{i}]") for i, value in enumerate(document))


def _coupling(entry: dict, path: str) -> tuple[Fraction, CouplingMatrix]:
    lam = parse_decimal(_field(entry, "lambda", path, (str, int)), f"{path}.lambda")
    if "matrix" in entry:
        edges = _field(entry, "edges", path, list)
        rows = _field(entry, "matrix", path, list)
        matrix = [_values(row, f"{path}.matrix[{i}]") for i, row in enumerate(rows)]
        return lam, _domain(path, lambda: CouplingMatrix.from_matrix(edges, matrix))
    ref = _field(entry, "ref_edge", path, str)
    ratios = _field(entry, "ratios", path, dict)
    parsed = {eid: parse_decimal(value, f"{path}.ratios.{eid}") for eid, value in ratios.items()}
    return lam, CouplingMatrix(ref, parsed)


def spectral_from_document(document: dict) -> SpectralData:
    graph_document = _field(document, "graph", "$", dict)
    graph = _graph(_field(graph_document, "edges", "$.graph", list), "$.graph.edges")
    sigma = _values(document.get("sigma", []), "$.sigma")

    sigma_e_document = document.get("sigma_e", {})
    if not isinstance(sigma_e_document, dict):
        raise SchemaError("Expected an object keyed by edge id", path="$.sigma_e")
    unknown = set(sigma_e_document) - set(graph.edge_ids)
    if unknown:
        raise SchemaError(f"Unknown edges {sorted(unknown)}", path="$.sigma_e")
    sigma_e = {eid: _values(values, f"$.sigma_e.{eid}") for eid, values in sigma_e_document.items()}

    coupling_document = document.get("coupling", [])
    if not isinstance(coupling_document, list):
        raise SchemaError("Expected a list of coupling matrices", path="$.coupling")
    coupling = {}
    for i, entry in enumerate(coupling_document):
        lam, matrix = _coupling(entry, f"$.coupling[{i}]")
        if lam in coupling:
            raise SchemaError(f"Duplicate coupling matrix at {lam}", path=f"$.coupling[{i}].lambda")
        coupling[lam] = matrix
    return SpectralData(graph, sigma, sigma_e, coupling, exact=bool(document.get("exact", True)))


def _written_exactly(value: Fraction, digits: int | None) -> bool:
    return Fraction(format_decimal(value, digits)) == value


def spectral_to_document(data: SpectralData, digits: int | None = None) -> dict:
    """
    The "exact" flag is cleared as soon as one value had to be rounded to the digits.
    """
    values = [
        *(edge.length for edge in data.graph.edges),
        *data.sigma,
        *(mu for spectrum in data.sigma_e.values() for mu in spectrum),
        *(r for matrix in data.coupling.values() for r in matrix.ratios.values()),
    ]
    return {
        "format": config.document_format,
        "exact": data.exact and all(_written_exactly(value, digits) for value in values),
        "graph": {"edges": [{"id": e.id, "length": format_decimal(e.length, digits)} for e in data.graph.edges]},
        "sigma": [format_decimal(lam, digits) for lam in data.sigma],
        "kappa": {format_decimal(lam, digits): kappa for lam, kappa in data.multiplicities.items()},
        "sigma_e": {eid: [format_decimal(mu, digits) for mu in values] for eid, values in data.sigma_e.items()},
        "coupling": [
            {
                "lambda": format_decimal(lam, digits),
                "ref_edge": matrix.ref_edge,
                "ratios": {eid: format_decimal(r, digits) for eid, r in matrix.ratios.items()},
            }
            for lam, matrix in data.coupling.items()
        ],
    }


def document_kind(document: dict) -> str:
    if isinstance(document, dict) and "graph" in document:
        return "spectral"
    if isinstance(document, dict) and "edges" in document:
        return "measure"
    raise SchemaError("Neither a measure nor a spectral document", path="$")


def read_document(fpath: str) -> dict:
    if os.path.exists(fpath) is False:
        raise SchemaError(f"File {fpath} not found", path="$", code="file_not_found")
    with open(fpath) as f:
        try:
            document = json.load(f)
        except json.JSONDecodeError as err:
            raise SchemaError(f"Malformed JSON: {err.msg} at line {err.lineno}", path="$") from err
    version = _field(document, "format", "$", str)
    if version != config.document_format:
        raise SchemaError(f"Unsupported format {version!r}", path="$.format")
    logger.debug("Read %s document from %s", document_kind(document), fpath)
    return document


def write_document(fpath: str, document: dict) -> None:
    with open(fpath, "w") as f:
        json.dump(document, f, sort_keys=True, indent=2)
        f.write("\n")


def report_csv(frame: pd.DataFrame, digits: int | None = None, header: str | None = None) -> str:
    """
    CSV text of a report; rational cells become decimal strings. `header` is written first as a comment line.
    """
    formatted = frame.map(lambda v: format_decimal(v, digits) if isinstance(v, Fraction) else v)
    text = formatted.to_csv(index=False, lineterminator="\n")
    return f"# {header}\n{text}" if header else text


def write_report(fpath: str, frame: pd.DataFrame, digits: int | None = None, header: str | None = None) -> None:
    with open(fpath, "w") as f:
        f.write(report_csv(frame, digits, header))
