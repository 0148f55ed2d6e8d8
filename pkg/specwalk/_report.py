# encoding: utf-8

import hashlib
import io
import math
import time
from decimal import Decimal

import simplejson as json

from .__version__ import __version__
from ._const import FLOAT_SIGNIFICANT_DIGITS, INFINITE_DISTANCE, SCHEMA_NAME


def digest_text(text):
    if not isinstance(text, bytes):
        text = text.encode("utf-8")

    return "sha256:{}".format(hashlib.sha256(text).hexdigest())


def to_json_value(value):
    """
    Recursively prepare a value for JSON output: floats become decimals with
    17 significant digits and infinite distances become ``-1``.
    """

    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, dict):
        return {str(key): to_json_value(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json_value(item) for item in value]
    if hasattr(value, "item") and not isinstance(value, (str, bytes)):
        # numpy scalars
        return to_json_value(value.item())
    if isinstance(value, float):
        if math.isinf(value):
            return INFINITE_DISTANCE
        if math.isnan(value):
            return None

        return Decimal("{:.{}g}".format(value, FLOAT_SIGNIFICANT_DIGITS))

    return value


def dumps_json(value):
    return json.dumps(to_json_value(value), use_decimal=True, sort_keys=True, indent=4)


class ReportDocument(object):
    """
    Schema-versioned JSON report of one command invocation.
    Everything except ``timing`` is deterministic for fixed input and options.
    """

    @property
    def records(self):
        return self.__records

    @property
    def certificates(self):
        return self.__certificates

    def __init__(self, command, input_digest=None):
        self.__command = command
        self.__input_digest = input_digest
        self.__records = []
        self.__certificates = []
        self.__extras = {}
        self.__start_time = time.time()

    def set_input_digest(self, input_digest):
        self.__input_digest = input_digest

    def add_record(self, record):
        self.__records.append(record)

    def add_certificate(self, certificate):
        self.__certificates.append(certificate)

    def set_extra(self, key, value):
        self.__extras[key] = value

    def to_dict(self):
        document = {
            "schema": SCHEMA_NAME,
            "version": __version__,
            "command": self.__command,
            "input_digest": self.__input_digest,
            "records": self.__records,
            "certificates": self.__certificates,
            "timing": {"elapsed_seconds": time.time() - self.__start_time},
        }
        document.update(self.__extras)

        return document

    def dumps(self):
        return dumps_json(self.to_dict())

    def write(self, file_path):
        with io.open(file_path, "w", encoding="utf-8") as f:
            f.write(self.dumps())
            f.write("\n")
