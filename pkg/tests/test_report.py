import json
from fractions import Fraction

import pytest

from hullforge import __version__
from hullforge.errors import InputError
from hullforge.gf import make_field
from hullforge.report import (
    ReportEnvelope, fraction_from_json, fraction_to_json, input_digest,
)


class TestReportEnvelope:
    """The JSON envelope every subcommand prints with --json."""

    def test_build(self):
        envelope = ReportEnvelope.build("hull", make_field(3, 2), {"ell": 1}, "3 2 1 1\n1\n")
        assert envelope.field == {"p": 3, "m": 2, "q": 9, "modulus": [1, 0, 1], "subfield_order": 3}
        assert envelope.tool_version == __version__
        assert envelope.input_digest.startswith("sha256:")
        assert len(envelope.input_digest) == len("sha256:") + 64

    def test_no_source_no_digest(self):
        envelope = ReportEnvelope.build("field-info", make_field(2, 1), {})
        assert envelope.input_digest is None

    def test_json_is_sorted_and_parses_back(self):
        envelope = ReportEnvelope.build("mindist", make_field(5, 1), {"d": 2, "n": 6}, "x")
        text = envelope.to_json()
        data = json.loads(text)
        assert list(data) == sorted(data)
        assert ReportEnvelope.from_json(text) == envelope

    def test_invalid_json(self):
        with pytest.raises(InputError, match="Invalid report"):
            ReportEnvelope.from_json("{not json")


class TestHelpers:

    def test_digest_is_stable(self):
        assert input_digest("abc") == (
            "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad")

    def test_fraction(self):
        assert fraction_to_json(Fraction(6, 8)) == {"num": 3, "den": 4}
        assert fraction_from_json({"num": -2, "den": 6}) == Fraction(-1, 3)
