from fractions import Fraction as F

import pytest

from plgroups import PLMapCircle, PLMapLine, parse_word
from plgroups.chains import make_kkl_generators
from plgroups.rings import cv_witness_data
from plgroups.serialize import (WitnessData, parse_maps, parse_witness_file,
                                read_group_file, render_group, render_maps,
                                render_witness_file)


class TestMapFiles:
    def test_line_round_trip(self):
        a, b = make_kkl_generators()
        text = render_maps({"a": a, "b": b})
        again = parse_maps(text)
        assert again == {"a": a, "b": b}
        assert render_maps(again) == text

    def test_circle_round_trip(self, ring):
        named = dict(zip(ring.names, ring.maps))
        text = render_maps(named)
        assert parse_maps(text) == named
        assert render_maps(parse_maps(text)) == text

    def test_translation_block_keeps_tails(self):
        a = PLMapLine.translation(F(-3, 7))
        text = render_maps({"a": a})
        assert "tails -3/7 -3/7" in text
        assert parse_maps(text)["a"] == a

    def test_comments_and_blank_lines_ignored(self):
        text = "# heading\nmap id\ncircle L=5\nbp 0:0\n\n# trailing\n"
        assert parse_maps(text) == {"id": PLMapCircle.identity(F(5))}

    def test_errors(self):
        with pytest.raises(ValueError):
            parse_maps("map x\nsphere\n")
        with pytest.raises(ValueError):
            parse_maps("map x\nline\nbp 0:0\nbp 1:0\ntails 0 -1\n")
        with pytest.raises(ValueError):
            parse_maps("map x\ncircle L=5\nbp 0:0\n\nmap x\ncircle L=5\nbp 0:0\n")


class TestGroupFiles:
    def test_round_trip(self, tmp_path, ring):
        from plgroups.serialize import write_maps_file
        write_maps_file(tmp_path / "g.maps", dict(zip(ring.names, ring.maps)))
        (tmp_path / "g.group").write_text(render_group("ring", ring.names, "g.maps"))
        gf = read_group_file(tmp_path / "g.group")
        assert gf.kind == "ring"
        assert gf.gen_names == ring.names
        assert gf.assignment().names == ring.names

    def test_missing_generator(self, tmp_path):
        a, b = make_kkl_generators()
        from plgroups.serialize import write_maps_file
        write_maps_file(tmp_path / "g.maps", {"a": a})
        (tmp_path / "g.group").write_text(render_group("set", ("a", "b"), "g.maps"))
        with pytest.raises(ValueError):
            read_group_file(tmp_path / "g.group")


class TestWitnessFiles:
    def test_round_trip(self, ring):
        data = cv_witness_data(ring)
        wd = WitnessData(defs=data.defs, edges=dict(data.witnesses),
                         classes=list(data.classes), dense=dict(data.dense))
        text = render_witness_file(wd)
        back = parse_witness_file(text)
        assert back.defs == wd.defs
        assert back.edges == wd.edges
        assert back.classes == wd.classes
        assert back.dense == wd.dense
        assert render_witness_file(back) == text

    def test_class_line_with_via(self):
        parsed = parse_witness_file("class V1: r1 rp1 via r3^2 r2^2 r1^2 r5\n")
        assert parsed.classes == [("V1", ("r1", "rp1"),
                                   (parse_word("r3^2 r2^2 r1^2 r5"),))]

    def test_bad_line(self):
        with pytest.raises(ValueError):
            parse_witness_file("edging r1 r2 r1\n")
