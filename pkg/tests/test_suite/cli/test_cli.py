import os
import pytest
from click.testing import CliRunner
from pyenlarge.cli.cli import cli
from pyenlarge.cli.templates import CONFIG_TEMPLATE
from pyenlarge.experiments import read_reports, VERDICTS_CSV_FILENAME

# globals
CONVEX_COMBO_CONFIG = """config_version = 1
name = convex_combo
model_kind = geom_poisson
lam = 1.0
psi = 0.5
time_kind = convex_combo_jumps
k1 = 0.5
k2 = 0.5
n_paths = 20
horizon = 6.0
seed = 5
"""


@pytest.fixture
def config_file(tmp_path):
    filename = str(tmp_path / "convex_combo.cfg")
    with open(filename, "w") as fp:
        fp.write(CONVEX_COMBO_CONFIG)
    return filename


@pytest.mark.cli
def test_welcome():
    result = CliRunner().invoke(cli, [])
    assert result.exit_code == 0
    assert "Welcome to the PyEnlarge CLI program!" in result.output
    assert "config-template" in result.output


@pytest.mark.cli
def test_version():
    result = CliRunner().invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert "0.1.0" in result.output


@pytest.mark.cli
def test_list_kinds():
    result = CliRunner().invoke(cli, ["--list-kinds"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert len(lines) == 10
    convex = [line for line in lines if line.startswith("convex_combo_jumps")]
    assert convex[0].split()[-2:] == ["k1,", "k2"]
    emery = [line for line in lines if line.startswith("emery_pseudo")]
    assert emery[0].split()[-1] == "-"


@pytest.mark.cli
def test_config_template(tmp_path):
    result = CliRunner().invoke(cli, ["config-template"])
    assert result.exit_code == 0
    assert result.output == CONFIG_TEMPLATE
    outfile = str(tmp_path / "template.cfg")
    result = CliRunner().invoke(cli, ["config-template", "--outfile", outfile])
    assert result.exit_code == 0
    with open(outfile, "r") as fp:
        assert fp.read() == CONFIG_TEMPLATE


@pytest.mark.cli
def test_simulate(config_file, tmp_path):
    out = str(tmp_path / "results")
    result = CliRunner().invoke(cli, ["simulate", "--config", config_file, "--paths", "4", "--out", out])
    assert result.exit_code == 0, result.output
    assert "of 4 paths" in result.output
    with open(os.path.join(out, "paths.csv"), "r") as fp:
        assert fp.readline().startswith("path_id")
    with open(os.path.join(out, "realized_times.csv"), "r") as fp:
        assert len(fp.read().splitlines()) == 5


@pytest.mark.cli
def test_verify_honest_and_tabulate(config_file, tmp_path):
    out = str(tmp_path / "results")
    result = CliRunner().invoke(cli, ["verify-honest", "--config", config_file, "--out", out, "--threads", "2"])
    assert result.exit_code == 0, result.output
    assert "1 of 1 checks: pass" in result.output
    filename = os.path.join(out, "convex_combo_honest.json")
    reports = read_reports(filename)
    assert [r.name for r in reports] == ["honest"]

    tables = str(tmp_path / "tables")
    result = CliRunner().invoke(cli, ["tabulate", filename, "--out", tables])
    assert result.exit_code == 0, result.output
    assert "Read 1 reports from 1 files" in result.output
    assert os.path.exists(os.path.join(tables, VERDICTS_CSV_FILENAME))


@pytest.mark.cli
def test_invalid_configuration(tmp_path):
    filename = str(tmp_path / "broken.cfg")
    with open(filename, "w") as fp:
        fp.write("config_version = 1\ncolour = red\n")
    result = CliRunner().invoke(cli, ["verify-honest", "--config", filename])
    assert result.exit_code == 1
    assert "Error: Unknown key 'colour' (line=2, field=colour)" in result.output


@pytest.mark.cli
def test_convergence_errors(config_file):
    result = CliRunner().invoke(cli, ["convergence", "--config", config_file, "--dts", "a,b"])
    assert result.exit_code == 1
    assert "--dts must be a comma separated list" in result.output
    result = CliRunner().invoke(cli, ["convergence", "--config", config_file])
    assert result.exit_code == 1
    assert "needs a Brownian model" in result.output


@pytest.mark.cli
def test_verify_arbitrage_requires_side(config_file):
    result = CliRunner().invoke(cli, ["verify-arbitrage", "--config", config_file])
    assert result.exit_code == 2
