import json

import jsonschema
import pytest

from sgw.cli import (
    EXIT_GUARD,
    EXIT_NEGATIVE,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_USAGE,
    main,
    parse_graph,
    serialize_graph,
)
from sgw.constructions import make
from sgw.core import build
from sgw.errors import ParseError
from sgw.homomorphism import SignedHomomorphism, validate
from sgw.schemas import (
    BALANCE_SCHEMA,
    CERTIFICATE_SCHEMA,
    COORDINATES_SCHEMA,
    DECOMPOSITION_SCHEMA,
    SWITCH_SET_SCHEMA,
)


def write_graph(tmp_path, name, g):
    path = tmp_path / name
    path.write_text(serialize_graph(g))
    return str(path)


class TestGraphFormat:
    def test_round_trip(self):
        g = build(4, [(0, 1, 1), (1, 2, -1), (0, 3, -1)])
        assert parse_graph(serialize_graph(g)) == g

    def test_serialized_text_is_canonical(self):
        g = build(3, [(2, 0, 1), (1, 0, -1)])
        text = serialize_graph(g)
        assert text == "sg 3\n0 1 -\n0 2 +\n"
        assert serialize_graph(parse_graph(text)) == text

    def test_comments_and_blanks_ignored(self):
        g = parse_graph("# comment\nsg 2\n\n0 1 +\n# trailing\n")
        assert g.n == 2 and g.sign(0, 1) == 1

    @pytest.mark.parametrize(
        "text",
        ["", "nope 3", "sg x", "sg -1", "sg 2\n0 1 ?", "sg 2\n0 1",
         "sg 2\na b +"],
    )
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_graph(text)


class TestCommands:
    def test_product_with_coords(self, tmp_path, capsys):
        a = write_graph(tmp_path, "a.sg", make("K_plus", 2))
        b = write_graph(tmp_path, "b.sg", make("K_minus", 2))
        coords = tmp_path / "coords.json"
        out = tmp_path / "prod.sg"
        code = main(["product", a, b, "-o", str(out), "--coords", str(coords)])
        assert code == EXIT_OK
        g = parse_graph(out.read_text())
        assert g.n == 4 and g.m == 4
        payload = json.loads(coords.read_text())
        jsonschema.validate(payload, COORDINATES_SCHEMA)
        assert payload["coords"] == [[0, 0], [0, 1], [1, 0], [1, 1]]

    def test_decompose_bc4(self, tmp_path, capsys):
        path = write_graph(tmp_path, "c4.sg", make("BC", 4))
        out = tmp_path / "dec.json"
        prefix = str(tmp_path / "factor_")
        code = main(["decompose", path, "-o", str(out),
                     "--factors-prefix", prefix])
        assert code == EXIT_OK
        payload = json.loads(out.read_text())
        jsonschema.validate(payload, DECOMPOSITION_SCHEMA)
        assert len(payload["factors"]) == 2
        for i in range(2):
            f = parse_graph((tmp_path / f"factor_{i}.sg").read_text())
            assert f.n == 2 and f.negative_edges() == ()

    def test_chi_uc4_prints_4(self, tmp_path, capsys):
        path = write_graph(tmp_path, "uc4.sg", make("UC", 4))
        cert = tmp_path / "cert.json"
        code = main(["chi", path, "--certificate", str(cert)])
        assert code == EXIT_OK
        assert capsys.readouterr().out.strip() == "4"
        payload = json.loads(cert.read_text())
        jsonschema.validate(payload, CERTIFICATE_SCHEMA)
        # the certificate is self-contained: re-check it with validate alone
        target = build(payload["target"]["n"],
                       [tuple(e) for e in payload["target"]["edges"]])
        hom = SignedHomomorphism(tuple(payload["map"]),
                                 frozenset(payload["switch_set"]))
        assert validate(make("UC", 4), target, hom)

    def test_chi_guard_exit(self, tmp_path, capsys):
        path = write_graph(tmp_path, "k8.sg", make("K_plus", 8))
        assert main(["chi", path]) == EXIT_GUARD

    def test_equiv_positive(self, tmp_path, capsys):
        g = make("BC", 5)
        a = write_graph(tmp_path, "a.sg", g)
        b = write_graph(tmp_path, "b.sg", g)
        assert main(["equiv", a, b]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        jsonschema.validate(payload, SWITCH_SET_SCHEMA)
        assert payload == {"equivalent": True, "switch_set": []}

    def test_equiv_negative(self, tmp_path, capsys):
        a = write_graph(tmp_path, "a.sg", make("BC", 4))
        b = write_graph(tmp_path, "b.sg", make("UC", 4))
        assert main(["equiv", a, b]) == EXIT_NEGATIVE
        payload = json.loads(capsys.readouterr().out)
        jsonschema.validate(payload, SWITCH_SET_SCHEMA)
        assert payload == {"equivalent": False}

    def test_equiv_different_underlying_is_parse_exit(self, tmp_path, capsys):
        a = write_graph(tmp_path, "a.sg", make("BC", 4))
        b = write_graph(tmp_path, "b.sg", make("BC", 5))
        assert main(["equiv", a, b]) == EXIT_PARSE

    def test_balance_exit_codes(self, tmp_path, capsys):
        bal = write_graph(tmp_path, "bc.sg", make("BC", 4))
        unbal = write_graph(tmp_path, "uc.sg", make("UC", 4))
        assert main(["balance", bal]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        jsonschema.validate(payload, BALANCE_SCHEMA)
        assert payload["balanced"] is True
        assert main(["balance", unbal]) == EXIT_NEGATIVE
        payload = json.loads(capsys.readouterr().out)
        jsonschema.validate(payload, BALANCE_SCHEMA)
        assert payload["balanced"] is False and payload["witness_walk"]

    def test_make_round_trips(self, tmp_path, capsys):
        out = tmp_path / "uc5.sg"
        assert main(["make", "UC", "5", "-o", str(out)]) == EXIT_OK
        assert parse_graph(out.read_text()) == make("UC", 5)

    def test_verify_k4_classes_json(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        code = main(["verify", "k4_classes", "--json", str(out)])
        assert code == EXIT_OK
        text = capsys.readouterr().out
        assert "report: k4_classes" in text and "[PASS]" in text
        from sgw.schemas import REPORT_SCHEMA

        jsonschema.validate(json.loads(out.read_text()), REPORT_SCHEMA)

    def test_verify_guard_exit(self, capsys):
        assert main(["verify", "k18"]) == EXIT_GUARD
        assert main(["verify", "cycle_table", "--max-len", "7"]) == EXIT_GUARD


class TestExitCodes:
    def test_usage_errors(self, capsys):
        assert main([]) == EXIT_USAGE
        assert main(["frobnicate"]) == EXIT_USAGE
        assert main(["make", "BC"]) != EXIT_OK  # missing parameter

    def test_missing_file(self, capsys):
        assert main(["balance", "/nonexistent/g.sg"]) == EXIT_USAGE

    def test_parse_failure(self, tmp_path, capsys):
        bad = tmp_path / "bad.sg"
        bad.write_text("sg 2\n0 1 ?\n")
        assert main(["balance", str(bad)]) == EXIT_PARSE

    def test_construction_error_is_parse_exit(self, tmp_path, capsys):
        assert main(["make", "BC", "2"]) == EXIT_PARSE
