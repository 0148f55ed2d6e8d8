# encoding: utf-8

import io
import os

import path

from ._const import GRAPH6_HEADER, GRAPH6_MAX_ORDER, GRAPH6_SHORT_FORM_MAX_ORDER
from ._enum import GraphFormat
from ._graph import Graph
from ._logger import logger
from .error import ParseError, TooLargeError


_G6_BIAS = 63
_G6_LONG = 126


def _to_format(format_name):
    if isinstance(format_name, GraphFormat):
        return format_name

    try:
        return GraphFormat(format_name)
    except ValueError:
        raise ValueError("unknown graph format: {}".format(format_name))


def _encode_order(order):
    if order <= GRAPH6_SHORT_FORM_MAX_ORDER:
        return [order + _G6_BIAS]
    if order <= GRAPH6_MAX_ORDER:
        return [_G6_LONG] + [((order >> shift) & 0x3F) + _G6_BIAS for shift in (12, 6, 0)]

    raise TooLargeError("graph6 supports at most {:d} vertices".format(GRAPH6_MAX_ORDER))


def _upper_triangle(order):
    for v in range(1, order):
        for u in range(v):
            yield (u, v)


def _encode_graph6(graph):
    data = _encode_order(graph.order)
    value = 0
    nbits = 0

    for u, v in _upper_triangle(graph.order):
        value = (value << 1) | graph.has_edge(u, v)
        nbits += 1
        if nbits == 6:
            data.append(value + _G6_BIAS)
            value = 0
            nbits = 0

    if nbits:
        data.append((value << (6 - nbits)) + _G6_BIAS)

    return "".join(chr(c) for c in data)


def _decode_graph6(text):
    text = text.strip()

    if text.startswith(GRAPH6_HEADER):
        raise ParseError("graph6 header lines are not supported", offset=0)
    if not text:
        raise ParseError("empty graph6 string", offset=0)

    for offset, char in enumerate(text):
        if not _G6_BIAS <= ord(char) <= _G6_LONG:
            raise ParseError("invalid graph6 byte {!r}".format(char), offset=offset)

    data = [ord(char) - _G6_BIAS for char in text]

    if data[0] != _G6_LONG - _G6_BIAS:
        order = data[0]
        pos = 1
    else:
        if len(data) < 4:
            raise ParseError("truncated graph6 order field", offset=len(data))
        if data[1] == _G6_LONG - _G6_BIAS:
            raise TooLargeError(
                "graph6 orders above {:d} are not supported".format(GRAPH6_MAX_ORDER)
            )
        order = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4

    nbits = order * (order - 1) // 2
    expected = pos + (nbits + 5) // 6
    if len(data) != expected:
        raise ParseError(
            "graph6 length mismatch for {:d} vertices: expected {:d} bytes, got {:d}".format(
                order, expected, len(data)
            ),
            offset=min(len(data), expected),
        )

    padding = (6 - nbits % 6) % 6
    if padding and data[-1] & ((1 << padding) - 1):
        raise ParseError("nonzero graph6 padding bits", offset=len(data) - 1)

    rows = [0] * order
    for k, (u, v) in enumerate(_upper_triangle(order)):
        if data[pos + k // 6] >> (5 - k % 6) & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u

    return Graph(order, rows)


def _decode_edgelist(text):
    lines = [(i + 1, line.split()) for i, line in enumerate(text.splitlines())]
    lines = [(lineno, fields) for lineno, fields in lines if fields]

    if not lines:
        raise ParseError("empty edgelist", line=1)

    header_lineno, header = lines[0]
    if len(header) != 2 or not all(field.isdigit() for field in header):
        raise ParseError("edgelist header must be 'n m'", line=header_lineno)

    order, size = (int(field) for field in header)
    if len(lines) - 1 != size:
        raise ParseError(
            "edgelist declares {:d} edges but has {:d} edge lines".format(size, len(lines) - 1),
            line=lines[-1][0],
        )

    edges = []
    for lineno, fields in lines[1:]:
        if len(fields) != 2 or not all(field.isdigit() for field in fields):
            raise ParseError("edge line must be 'u v'", line=lineno)

        u, v = (int(field) for field in fields)
        if not (0 <= u < order and 0 <= v < order):
            raise ParseError("edge {:d}-{:d} out of range".format(u, v), line=lineno)

        edges.append((u, v))

    return Graph.from_edges(order, edges, allow_duplicates=False)


def _encode_edgelist(graph):
    edges = graph.edges()

    return "\n".join(
        ["{:d} {:d}".format(graph.order, len(edges))]
        + ["{:d} {:d}".format(u, v) for u, v in edges]
    )


def load_graph(text, format_name=GraphFormat.AUTO):
    """
    Parse a graph from graph6 or edgelist text.

    :param format_name: ``graph6``, ``edgelist`` or ``auto``
        (try graph6 first, then edgelist).
    :raises specwalk.ParseError: malformed input.
    :raises specwalk.LoopError: the edgelist contains a loop.
    :raises specwalk.DuplicateEdgeError: the edgelist repeats an edge.
    """

    format_name = _to_format(format_name)

    if format_name == GraphFormat.GRAPH6:
        return _decode_graph6(text)
    if format_name == GraphFormat.EDGELIST:
        return _decode_edgelist(text)

    try:
        return _decode_graph6(text)
    except ParseError as e:
        logger.debug("not a graph6 string, trying edgelist: {}".format(e))
        g6_error = e

    if len(text.split()) <= 1:
        raise g6_error

    return _decode_edgelist(text)


def serialize_graph(graph, format_name=GraphFormat.GRAPH6):
    format_name = _to_format(format_name)

    if format_name == GraphFormat.EDGELIST:
        return _encode_edgelist(graph)

    return _encode_graph6(graph)


def load_graph_file(file_path, format_name=GraphFormat.AUTO, encoding="utf-8"):
    with io.open(file_path, encoding=encoding) as f:
        return load_graph(f.read(), format_name)


def iter_graph6_lines(file_path, encoding="utf-8"):
    """
    Yield ``(line_number, graph6_text)`` for each nonblank line of a graph6 file.
    """

    with io.open(file_path, encoding=encoding) as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if line:
                yield (lineno, line)


def load_graph_argument(value, format_name=GraphFormat.AUTO, encoding="utf-8"):
    """
    Load a graph given either a file path or an inline graph6 string.
    A value is inline when it has no path separator and no such file exists.

    :return: ``(graph, source_text)``
    :raises specwalk.ParseError: malformed input.
    """

    file_path = path.Path(value)
    if os.sep not in value and "/" not in value and not file_path.isfile():
        logger.debug("inline graph6 argument: {}".format(value))
        return (load_graph(value, GraphFormat.GRAPH6), value)

    with io.open(file_path, encoding=encoding) as f:
        text = f.read()

    return (load_graph(text, format_name), text)
