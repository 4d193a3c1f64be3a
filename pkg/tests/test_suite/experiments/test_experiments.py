import os
import pytest
import pyenlarge
from pyenlarge.market import poisson_path_from_jump_times
from pyenlarge.random_times import (KIND_BROWNIAN_LEVEL,
                                   KIND_BROWNIAN_SUP_OVERALL,
                                   KIND_POISSON_LEVEL,
                                   KIND_POISSON_SUP_UNIT,
                                   KIND_POISSON_SUP_OVERALL,
                                   KIND_CONVEX_COMBO,
                                   KIND_EMERY)
from pyenlarge.experiments import (ExperimentConfig,
                                   Claim,
                                   parse_config,
                                   load_config,
                                   format_config,
                                   dump_config,
                                   claims_for,
                                   run_claim,
                                   run_experiment,
                                   tabulate,
                                   convergence_study,
                                   write_reports,
                                   read_reports,
                                   CHECK_HONEST,
                                   CHECK_JUMP_IDENTITY,
                                   CHECK_ARBITRAGE_BEFORE,
                                   CHECK_ARBITRAGE_AFTER,
                                   CHECK_DEFLATOR_BEFORE,
                                   CHECK_DEFLATOR_AFTER,
                                   GROUP_DEFLATOR,
                                   GROUP_NON_HONEST_POISSON,
                                   CONVERGENCE_SLOPE_RANGE,
                                   VERDICT_TABLE_HEADER,
                                   VERDICTS_CSV_FILENAME,
                                   VERDICTS_JSON_FILENAME)
from pyenlarge.strategies import residual_slope
from pyenlarge.cli.templates import CONFIG_TEMPLATE
from pyenlarge.exceptions import EnlargeConfigException, EnlargeContractException

# globals
POSITIVE = pyenlarge.MarketModel(kind=pyenlarge.MODEL_POISSON, lam=1.0, psi=0.5)
CONVEX_COMBO_CONFIG = """config_version = 1
name = convex_combo
model_kind = geom_poisson
lam = 1.0
psi = 0.5
time_kind = convex_combo_jumps
k1 = 0.5
k2 = 0.5
n_paths = 3
horizon = 4.0
checks = honest, jump_identity, arbitrage_before, arbitrage_after
"""
POISSON_LEVEL_CONFIG = """config_version = 1
name = poisson_level
model_kind = geom_poisson
lam = 1.0
psi = 0.5
time_kind = poisson_last_passage_level
b = 0.5
n_paths = 12
horizon = 15.0
seed = 5
checks = honest, jump_identity, arbitrage_before
"""
BROWNIAN_LEVEL_CONFIG = """config_version = 1
name = brownian_level
model_kind = brownian_gbm
sigma = 1.0
time_kind = brownian_last_passage_level
a = 0.5
n_paths = 50
horizon = 2.0
seed = 0
"""


def convex_combo_paths():
    jump_sets = [[1.0, 2.0], [0.5, 1.5, 3.0], [0.2, 0.3]]
    return [poisson_path_from_jump_times(POSITIVE, jumps, 4.0, index=i) for i, jumps in enumerate(jump_sets)]


@pytest.mark.experiments
def test_parse_template():
    config = parse_config(CONFIG_TEMPLATE)
    assert config.time_kind == KIND_POISSON_LEVEL
    assert config.b == 0.5
    assert config.n_paths == 100000
    assert config.horizon is None
    assert config.tolerance is None
    assert config.table_cache is None
    assert config.checks == []
    assert config.dt == 2.0**-10
    assert config.grid_step() is None


@pytest.mark.experiments
def test_format_config_reads_back(tmp_path):
    config = parse_config(CONVEX_COMBO_CONFIG)
    assert config.checks == [CHECK_HONEST, CHECK_JUMP_IDENTITY, CHECK_ARBITRAGE_BEFORE, CHECK_ARBITRAGE_AFTER]
    assert format_config(config).splitlines()[1] == "config_version = 1"
    filename = str(tmp_path / "experiment.cfg")
    dump_config(config, filename)
    assert load_config(filename) == config


@pytest.mark.experiments
@pytest.mark.parametrize("text,line,field", [
    ("config_version = 1\nmodel_kind geom_poisson\n", 2, None),
    ("config_version = 1\ncolour = red\n", 2, "colour"),
    ("config_version = 1\nlam = 1.0\nlam = 2.0\n", 3, "lam"),
    ("# comment\nname = x\n", 2, "name"),
    (CONVEX_COMBO_CONFIG.replace("n_paths = 3", "n_paths = 0"), 9, "n_paths"),
    (CONVEX_COMBO_CONFIG + "variant = guessed\n", 12, "variant"),
])
def test_parse_config_errors(text, line, field):
    with pytest.raises(EnlargeConfigException) as e:
        parse_config(text)
    assert e.value.line == line
    assert e.value.field == field


@pytest.mark.experiments
def test_parse_config_inconsistent_model():
    text = CONVEX_COMBO_CONFIG.replace("model_kind = geom_poisson", "model_kind = brownian_gbm\nsigma = 1.0")
    with pytest.raises(EnlargeConfigException) as e:
        parse_config(text)
    assert e.value.field is None


@pytest.mark.experiments
def test_parse_config_empty():
    with pytest.raises(EnlargeConfigException):
        parse_config("\n# only a comment\n")


@pytest.mark.experiments
def test_load_config_missing_file(tmp_path):
    with pytest.raises(EnlargeConfigException):
        load_config(str(tmp_path / "missing.cfg"))


@pytest.mark.experiments
def test_config_hash():
    config = parse_config(CONVEX_COMBO_CONFIG)
    assert config.with_overrides(threads=4, output_dir="elsewhere").config_hash() == config.config_hash()
    assert config.with_overrides(seed=1).config_hash() != config.config_hash()
    assert config.with_overrides(seed=None) == config
    with pytest.raises(ValueError):
        config.with_overrides(n_paths=0)


@pytest.mark.experiments
def test_resolved_horizon():
    config = parse_config(CONVEX_COMBO_CONFIG)
    assert config.resolved_horizon() == 4.0
    unit = ExperimentConfig(model_kind=pyenlarge.MODEL_POISSON, lam=1.0, psi=0.5, time_kind=KIND_POISSON_SUP_UNIT)
    assert unit.resolved_horizon() == 1.0
    unbounded = config.with_overrides(horizon=None)
    assert unbounded.horizon == 4.0
    open_config = ExperimentConfig(**dict(config.dict(), horizon=None))
    assert open_config.resolved_horizon() > 1.0


@pytest.mark.experiments
def test_claims_registry():
    claims = claims_for(KIND_CONVEX_COMBO)
    assert len(claims) == 5
    assert all([c.group in [GROUP_NON_HONEST_POISSON, pyenlarge.experiments.GROUP_DEFLATOR] for c in claims])
    assert [c.check for c in claims_for(KIND_CONVEX_COMBO, [CHECK_HONEST])] == [CHECK_HONEST]
    names = [c.name for c in claims_for(KIND_POISSON_SUP_OVERALL)]
    assert "arbitrage_before.buy_and_hold" in names
    negative = pyenlarge.MarketModel(kind=pyenlarge.MODEL_POISSON, lam=1.0, psi=-0.5)
    after = [c for c in claims_for(KIND_POISSON_SUP_OVERALL, [CHECK_DEFLATOR_AFTER])]
    assert after[0].applies_to(POSITIVE) is True
    assert after[0].applies_to(negative) is False
    with pytest.raises(EnlargeContractException):
        claims_for("unknown_kind")
    with pytest.raises(ValueError):
        Claim(group="g", kind=KIND_EMERY, check="unknown_check", statement="s")


@pytest.mark.experiments
def test_run_experiment_on_given_paths():
    config = parse_config(CONVEX_COMBO_CONFIG)
    reports = run_experiment(config, paths=convex_combo_paths())
    assert [r.name for r in reports] == [CHECK_HONEST, CHECK_JUMP_IDENTITY, CHECK_ARBITRAGE_BEFORE, CHECK_ARBITRAGE_AFTER]
    for report in reports:
        assert report.verdict == pyenlarge.VERDICT_PASS
        assert report.group == GROUP_NON_HONEST_POISSON
        assert report.kind == KIND_CONVEX_COMBO
        assert report.config_hash == config.config_hash()
        assert report.details["claim"] != ""


@pytest.mark.experiments
def test_run_experiment_thread_independent():
    config = parse_config(CONVEX_COMBO_CONFIG)
    single = run_experiment(config, paths=convex_combo_paths())
    threaded = run_experiment(config.with_overrides(threads=3), paths=convex_combo_paths())
    assert [r.estimate for r in single] == pytest.approx([r.estimate for r in threaded], nan_ok=True)
    assert [r.verdict for r in single] == [r.verdict for r in threaded]


@pytest.mark.experiments
def test_run_experiment_without_matching_claim():
    config = parse_config(CONVEX_COMBO_CONFIG).with_overrides(checks=[CHECK_DEFLATOR_AFTER])
    with pytest.raises(EnlargeContractException):
        run_experiment(config, paths=convex_combo_paths())


@pytest.mark.experiments
def test_run_claim_of_another_kind():
    config = parse_config(CONVEX_COMBO_CONFIG)
    claim = claims_for(KIND_POISSON_LEVEL)[0]
    with pytest.raises(EnlargeContractException):
        run_claim(claim, config, convex_combo_paths())


@pytest.mark.experiments
def test_convergence_study_needs_brownian_model():
    with pytest.raises(EnlargeContractException):
        convergence_study(parse_config(CONVEX_COMBO_CONFIG))


@pytest.mark.experiments
def test_reports_files_and_tables(tmp_path):
    config = parse_config(CONVEX_COMBO_CONFIG)
    reports = run_experiment(config, paths=convex_combo_paths())
    filename = str(tmp_path / "reports.json")
    write_reports(reports, filename)
    loaded = read_reports(filename)
    assert [r.name for r in loaded] == [r.name for r in reports]
    assert [r.verdict for r in loaded] == [r.verdict for r in reports]

    rows = tabulate(loaded, out_dir=str(tmp_path / "tables"))
    assert rows[0] == VERDICT_TABLE_HEADER
    assert len(rows) == 1 + len(reports)
    assert sorted([row[2] for row in rows[1:]]) == [row[2] for row in rows[1:]]
    assert os.path.exists(str(tmp_path / "tables" / VERDICTS_CSV_FILENAME))
    assert os.path.exists(str(tmp_path / "tables" / VERDICTS_JSON_FILENAME))


@pytest.mark.experiments
def test_read_reports_malformed(tmp_path):
    filename = str(tmp_path / "broken.json")
    with open(filename, "w") as fp:
        fp.write("{not json")
    with pytest.raises(EnlargeConfigException):
        read_reports(filename)


@pytest.mark.experiments
def test_brownian_level_deflator_claim_is_informational():
    strict = claims_for(KIND_BROWNIAN_LEVEL, [CHECK_DEFLATOR_BEFORE])
    assert len(strict) == 1
    assert strict[0].informational is True
    assert "strict local martingale" in strict[0].statement
    for kind in [KIND_BROWNIAN_SUP_OVERALL, KIND_POISSON_LEVEL, KIND_CONVEX_COMBO, KIND_EMERY]:
        assert [c.informational for c in claims_for(kind, [CHECK_DEFLATOR_BEFORE])] == [False]


@pytest.mark.experiments
@pytest.mark.filterwarnings("ignore::UserWarning")
def test_run_claim_informational_deflator():
    config = parse_config(CONVEX_COMBO_CONFIG).with_overrides(tolerance_sigmas=1e-9)
    claim = Claim(group=GROUP_DEFLATOR, kind=KIND_CONVEX_COMBO, check=CHECK_DEFLATOR_BEFORE,
                  informational=True, statement="L S^tau may lose mass")
    report = run_claim(claim, config, convex_combo_paths())
    assert report.verdict == pyenlarge.VERDICT_INFORMATIONAL
    assert "relative_decay" in report.details
    strict = run_claim(claim.copy(update={"informational": False}), config, convex_combo_paths())
    assert strict.verdict == pyenlarge.VERDICT_FAIL


@pytest.mark.experiments
def test_report_files_are_reproducible(tmp_path):
    config = parse_config(POISSON_LEVEL_CONFIG)
    first = str(tmp_path / "first.json")
    second = str(tmp_path / "second.json")
    threaded = str(tmp_path / "threaded.json")
    write_reports(run_experiment(config), first)
    write_reports(run_experiment(config), second)
    write_reports(run_experiment(config.with_overrides(threads=3)), threaded)
    with open(first, "rb") as fp:
        expected = fp.read()
    for filename in [second, threaded]:
        with open(filename, "rb") as fp:
            assert fp.read() == expected


@pytest.mark.experiments
def test_convergence_study_slope():
    config = parse_config(BROWNIAN_LEVEL_CONFIG)
    dts = [2.0**-4, 2.0**-6, 2.0**-8]
    report = convergence_study(config, dts=dts)
    assert report.name == "convergence_slope"
    assert report.group == pyenlarge.experiments.GROUP_CONVERGENCE
    assert report.details["dts"] == dts
    residuals = report.details["mean_abs_residuals"]
    assert len(residuals) == 3
    assert all([r > 0 for r in residuals])
    assert report.estimate == pytest.approx(residual_slope(dts, residuals))
    low, high = CONVERGENCE_SLOPE_RANGE
    assert low < 0.5 < high
    expected = pyenlarge.VERDICT_PASS if low <= report.estimate <= high else pyenlarge.VERDICT_FAIL
    assert report.verdict == expected
    assert report.config_hash == config.config_hash()
