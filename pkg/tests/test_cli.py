import json

import pytest

from conic_floors.cli import (
    EXIT_DOMAIN,
    EXIT_MISSING_KEYS,
    EXIT_OK,
    EXIT_PARSE,
    QuerySpec,
    main,
    run,
)
from conic_floors.config import config
from conic_floors.exceptions import ParseError
from conic_floors.schema import Command, OutputFormat

QUARTICS = ["gw-rel", "--n", "6", "--class", "4:1,1,1,1,1,1", "--genus", "0", "--beta", "1^2"]


def test_gw_rel(capsys):
    assert main(QUARTICS) == EXIT_OK
    assert capsys.readouterr().out == "616\n"


def test_json_output(capsys):
    assert main(QUARTICS + ["--format", "json", "--terms"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["value"] == 616
    assert json.loads(document["query"])["command"] == "gw-rel"
    assert sum(t["value"] for t in document["terms"]) == 616
    assert "stats" not in document


def test_csv_output(capsys):
    assert main(QUARTICS + ["--format", "csv", "--terms"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "label,value"
    assert lines[-1] == "total,616"
    assert sum(int(line.rsplit(",", 1)[1]) for line in lines[1:-1]) == 616


def test_text_terms(capsys):
    assert main(["fw", "--n", "8", "--class", "4:1,1,1,1,1,1,1,1", "--kappa", "2", "--s", "1", "--terms"]) == EXIT_OK
    first, *rows = capsys.readouterr().out.splitlines()
    assert first == "36"
    assert sum(int(row.split("\t")[0]) for row in rows) == 36


def test_dot_output(capsys):
    argv = ["diagrams", "--n", "0", "--class", "3:", "--beta", "1^6", "--format", "dot"]
    assert main(argv) == EXIT_OK
    assert capsys.readouterr().out.count("digraph") == 2


def test_dot_needs_diagrams(capsys):
    assert main(["gw-plane", "--n", "0", "--class", "3:", "--format", "dot"]) == EXIT_PARSE
    assert capsys.readouterr().err.startswith("error: parse:")


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["fw", "--n", "8", "--class", "4:1,1,1,1,1,1,1,1", "--kappa", "4", "--variant", "sided-sided"], "32"),
        (["fw", "--n", "8", "--class", "4:1,1,1,1,1,1,1,1", "--s", "1"], "136"),
        (["w-plane", "--n", "0", "--class", "3:", "--s", "2"], "4"),
        (["gw-plane", "--n", "0", "--class", "3:", "--genus", "1"], "1"),
    ],
)
def test_values(capsys, argv, expected):
    assert main(argv) == EXIT_OK
    assert capsys.readouterr().out.strip() == expected


@pytest.mark.parametrize(
    "argv",
    [
        ["gw-rel", "--class", "4;1"],
        ["gw-rel", "--class", "4:1,1", "--beta", "x^2"],
        ["w-x6", "--class", "6:2,2,2,2,2,2", "--structure", "sideways"],
        ["gw-rel", "--n", "9", "--class", "1:0,0,0,0,0,0,0,0,0"],
    ],
)
def test_parse_errors(capsys, argv):
    assert main(argv) == EXIT_PARSE
    assert capsys.readouterr().err.startswith("error: parse:")


def test_domain_errors(capsys):
    argv = ["w-x8", "--class", "6:2,2,2,2,2,2,2,2", "--s", "1"]
    assert main(argv) == EXIT_DOMAIN
    assert capsys.readouterr().err.startswith("error: domain:")


def test_unknown_command():
    with pytest.raises(SystemExit) as info:
        main(["bogus", "--class", "1:"])
    assert info.value.code == 2


def test_canonical_round_trip():
    spec = QuerySpec(command=Command.FW, n=8, d="4:1,1,1,1,1,1,1,1", kappa=2, s=1, format=OutputFormat.CSV)
    again = QuerySpec.from_canonical(spec.canonical())
    assert again == spec.model_copy(update={"format": OutputFormat.TEXT})
    with pytest.raises(ParseError):
        QuerySpec.from_canonical("{bad")


def test_stats_show_cache_hits(capsys):
    assert main(QUARTICS) == EXIT_OK
    capsys.readouterr()
    assert main(QUARTICS + ["--stats"]) == EXIT_OK
    value, stats = capsys.readouterr().out.splitlines()
    assert value == "616"
    fields = dict(item.split("=") for item in stats.split())
    assert fields["diagrams"] == "0"
    assert int(fields["cache_hits"]) > 0


def test_run_writes_the_cache(tmp_path):
    path = tmp_path / "explicit.json"
    spec = QuerySpec(command=Command.GW_PLANE, n=0, d="3:", cache=str(path))
    assert run(spec) == (EXIT_OK, "12\n")
    assert path.exists()


@pytest.mark.slow
def test_w_x6(capsys):
    argv = ["w-x6", "--structure", "kappa=0", "--class", "6:2,2,2,2,2,2", "--s", "0"]
    assert main(argv) == EXIT_OK
    assert capsys.readouterr().out == "1000\n"


@pytest.mark.slow
def test_gw_x8(capsys):
    argv = ["gw-x8", "--class", "6:2,2,2,2,2,2,2,2", "--genus", "0", "--provider", str(config.provider_table_path)]
    assert main(argv) == EXIT_OK
    assert capsys.readouterr().out == "90\n"


@pytest.mark.slow
def test_missing_provider_keys(tmp_path, capsys):
    empty = tmp_path / "empty.table"
    empty.write_text("")
    argv = ["gw-x8", "--class", "6:2,2,2,2,2,2,2,2", "--provider", str(empty)]
    assert main(argv) == EXIT_MISSING_KEYS
    err = capsys.readouterr().err
    assert err.startswith("error: missing-provider-keys: ")
    assert "gw|4:1,1,1,1,1,1,1,1,2|g=0|b=0" in err
