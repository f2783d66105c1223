import json
import os

import tmcat_py

FIXTURES = os.path.join(os.environ.get("TMCAT_SOURCE_DIR", "."), "tests", "fixtures")


def fixture(name):
    with open(os.path.join(FIXTURES, name)) as f:
        return f.read()


def test_opetope_counts():
    status, report = tmcat_py.run("opetopes", '{"dim": 2, "size": 4}')
    assert status == 0
    assert json.loads(report)["counts"]["total"] == 5


def test_non_cartesian_monad_fails():
    status, report = tmcat_py.run("check-monad", '{"name": "free_commutative_monoid", "bound": 3}')
    assert status == 1
    verdicts = json.loads(report)["verdicts"]
    assert verdicts["laws"]
    assert not verdicts["mult_square"]


def test_multicat_document_checks():
    status, report = tmcat_py.run("check-multicat", "{}", fixture("terminal.json"))
    assert status == 0
    assert json.loads(report)["counts"]["arrows"] == 4


def test_exit_contract():
    assert tmcat_py.run("no-such-command")[0] == 2
    assert tmcat_py.run("check-multicat", "{}", "{ nope")[0] == 2
    assert tmcat_py.run("opetopes", '{"dim": 3, "size": 9, "cap": 50}')[0] == 3


def test_reports_are_deterministic():
    doc = fixture("chain3.json")
    first = tmcat_py.run("algebras", '{"max_size": 2}', doc)
    second = tmcat_py.run("algebras", '{"max_size": 2}', doc)
    assert first == second


def test_dot_export():
    dot = tmcat_py.run_dot(fixture("export_sig.json"))
    assert dot.startswith("digraph signature")
