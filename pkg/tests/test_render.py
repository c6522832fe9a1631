import csv
import io
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from grayud.embedding import Embedding, build_g0, validate
from grayud.graph import Graph
from grayud.render import (
    CSV_HEADER, EmbeddingParseError, RenderStyle, embedding_from_json, embedding_to_json,
    sweep_to_csv, to_svg,
)
from grayud.sweep import FeasibilityMap, sweep

SVG = "{http://www.w3.org/2000/svg}"


def parse(svg):
    return ET.fromstring(svg.encode("ascii"))


class TestSvg:
    def test_counts(self, reference):
        root = parse(to_svg(reference))
        assert len(root.findall(f".//{SVG}line")) == 81
        marks = [c for c in root.iter(f"{SVG}circle") if c.get("class", "").startswith("vertex")]
        assert len(marks) == 54
        assert sum("solid" in c.get("class") for c in marks) == 27

    def test_hollow_unfilled_solid_filled(self, reference):
        root = parse(to_svg(reference))
        for c in root.iter(f"{SVG}circle"):
            if c.get("class") == "vertex hollow":
                assert c.get("fill") == "#ffffff"
            elif c.get("class") == "vertex solid":
                assert c.get("fill") == c.get("stroke") != "#ffffff"

    def test_deterministic(self, reference):
        assert to_svg(reference) == to_svg(reference)

    def test_circle_overlay(self, reference):
        root = parse(to_svg(reference, RenderStyle(circles=True)))
        circles = [c for c in root.iter(f"{SVG}circle") if c.get("class") == "unit-circle"]
        assert len(circles) == 27
        assert len({c.get("r") for c in circles}) == 1

    def test_y_axis_flipped(self):
        g = Graph(2, frozenset({(0, 1)}))
        e = Embedding([(0.0, 0.0), (0.0, 1.0)], g)
        root = parse(to_svg(e))
        low, high = (c for c in root.iter(f"{SVG}circle"))
        assert float(high.get("cy")) < float(low.get("cy"))

    def test_ascii_unix(self, reference):
        text = to_svg(reference, RenderStyle(circles=True))
        text.encode("ascii")
        assert "\r" not in text

    def test_missing_colour_rejected(self, reference):
        with pytest.raises(ValueError, match="no colour"):
            to_svg(reference, RenderStyle(colors={"b": "#000"}))

    def test_render_does_not_touch_embedding(self, reference):
        before = reference.coords.copy()
        to_svg(reference, RenderStyle(circles=True))
        assert np.array_equal(before, reference.coords)


class TestJson:
    def test_roundtrip_reference(self, reference):
        back = embedding_from_json(embedding_to_json(reference))
        assert back.graph == reference.graph
        assert back.colors == reference.colors
        assert back.params == reference.params
        assert np.array_equal(back.coords, reference.coords)
        a, b = validate(reference), validate(back)
        for key, value in a.metrics().items():
            assert abs(value - b.metrics()[key]) <= 1e-12

    def test_roundtrip_is_stable_text(self, reference):
        text = embedding_to_json(reference)
        assert embedding_to_json(embedding_from_json(text)) == text

    def test_seventeen_digits(self, reference):
        text = embedding_to_json(reference)
        x = float(reference.coords[0, 0])
        assert f'"x": {x:.17g}' in text
        assert float(f"{x:.17g}") == x

    def test_empty(self):
        e = embedding_from_json('{"params": null, "vertices": [], "edges": []}')
        assert e.n == 0 and e.params is None
        assert embedding_from_json(embedding_to_json(e)).n == 0

    def test_no_roles(self):
        g = Graph(2, frozenset({(0, 1)}))
        e = Embedding([(0, 0), (1, 0)], g)
        back = embedding_from_json(embedding_to_json(e))
        assert back.graph.roles is None and back.graph == g

    def test_truncated(self, reference):
        text = embedding_to_json(reference)
        with pytest.raises(EmbeddingParseError) as err:
            embedding_from_json(text[: len(text) // 2])
        assert err.value.location.startswith("line ")

    @pytest.mark.parametrize("doc,location", [
        ('[]', "$"),
        ('{"vertices": []}', "$"),
        ('{"vertices": [{"id": 0, "x": 0}], "edges": []}', "vertices[0].y"),
        ('{"vertices": [{"id": 3, "x": 0, "y": 0}], "edges": []}', "vertices[0].id"),
        ('{"vertices": [{"id": 0, "x": 0, "y": 0, "color": "q"}], "edges": []}', "vertices[0].color"),
        ('{"vertices": [{"id": 0, "x": 0, "y": 0}], "edges": [[0]]}', "edges[0]"),
        ('{"vertices": [{"id": 0, "x": 0, "y": 0}], "edges": [[0, 0]]}', "edges"),
        ('{"vertices": [], "edges": [], "params": {"h": "x"}}', "params"),
    ])
    def test_malformed(self, doc, location):
        with pytest.raises(EmbeddingParseError) as err:
            embedding_from_json(doc)
        assert err.value.location == location

    def test_g0(self):
        e = build_g0(0.5)
        back = embedding_from_json(embedding_to_json(e))
        assert back.graph == e.graph


class TestCsv:
    def test_rows(self):
        m = sweep((0.2, 0.8), (0.0, 2.0), 4, 3)
        rows = list(csv.reader(io.StringIO(sweep_to_csv(m))))
        assert tuple(rows[0]) == CSV_HEADER
        assert len(rows) == 13
        assert [float(r[0]) for r in rows[1:]] == sorted(float(r[0]) for r in rows[1:])

    def test_empty(self):
        m = FeasibilityMap((), 0, 0, (0.1, 0.9), (0.0, 1.0))
        assert sweep_to_csv(m) == ",".join(CSV_HEADER) + "\n"

    def test_status_vocabulary(self):
        m = sweep((0.1, 0.95), (0.0, 2.0943951023931953), 8, 8)
        rows = list(csv.DictReader(io.StringIO(sweep_to_csv(m))))
        assert {r["status"] for r in rows} <= {"valid", "no_intersection", "coincident", "asymmetric", "not_gray"}
