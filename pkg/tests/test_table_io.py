import json

import pytest

from conftest import S23_PROFILE
from utils.errors import InvalidParamsError, SetSpecError
from utils.graph import GraphParams
from utils.table_io import (
    dump_json,
    format_set,
    parse_set_spec,
    profile_dataframe,
    profile_from_csv,
    profile_to_csv,
    profile_to_json,
)
from utils.vertex_set import VertexSet


class TestProfileExport:
    def test_csv_layout(self):
        lines = profile_to_csv(S23_PROFILE).splitlines()
        assert lines[0] == "ell,theta"
        assert lines[1] == "0,0"
        assert lines[5] == "4,3"
        assert len(lines) == 11

    def test_csv_reads_back(self, tmp_path):
        text = profile_to_csv(S23_PROFILE)
        assert profile_from_csv(text) == S23_PROFILE
        path = tmp_path / "profile.csv"
        path.write_text(text)
        assert profile_from_csv(str(path)) == S23_PROFILE

    def test_csv_rejects_wrong_columns(self):
        with pytest.raises(InvalidParamsError):
            profile_from_csv("l,t\n0,0\n1,0\n")

    def test_csv_rejects_gaps(self):
        with pytest.raises(InvalidParamsError):
            profile_from_csv("ell,theta\n0,0\n2,0\n")

    def test_missing_file(self, tmp_path):
        with pytest.raises(InvalidParamsError):
            profile_from_csv(str(tmp_path / "missing.csv"))

    def test_json(self, s23):
        payload = profile_to_json(s23, S23_PROFILE)
        assert json.loads(dump_json(payload)) == {"n": 2, "m": 3, "values": S23_PROFILE}

    def test_dataframe(self):
        frame = profile_dataframe([0, 2, 2, 0])
        assert list(frame.columns) == ["ell", "theta"]
        assert frame["theta"].max() == 2


class TestSetSpec:
    def test_vertices(self, s23):
        S = parse_set_spec("00, 01,11", s23)
        assert format_set(S) == "{00,01,11}"

    def test_rank_ranges(self, s23):
        assert parse_set_spec("1-4", s23) == VertexSet.lex_segment(s23, 4)
        assert format_set(parse_set_spec("2-3,22", s23)) == "{01,02,22}"

    def test_empty_spec(self, s23):
        assert parse_set_spec("", s23).size == 0
        assert format_set(VertexSet.empty(s23)) == "{}"

    def test_large_alphabet(self):
        p = GraphParams(1, 12)
        assert format_set(parse_set_spec("11,3", p)) == "{3,11}"

    @pytest.mark.parametrize("spec", ["0", "03", "0a", "5-2", "0-3", "1-10"])
    def test_bad_items(self, s23, spec):
        with pytest.raises(SetSpecError):
            parse_set_spec(spec, s23)
