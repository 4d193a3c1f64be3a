import pytest
import pyenlarge
from pyenlarge.exceptions import (EnlargeException,
                                  EnlargeParameterException,
                                  EnlargeContractException,
                                  EnlargeDomainException,
                                  EnlargeNumericalException,
                                  EnlargeInvariantException,
                                  EnlargeConfigException)


@pytest.mark.exceptions
@pytest.mark.parametrize("cls", [
    EnlargeParameterException,
    EnlargeContractException,
    EnlargeDomainException,
    EnlargeNumericalException,
    EnlargeInvariantException,
    EnlargeConfigException,
])
def test_hierarchy(cls):
    assert issubclass(cls, EnlargeException)
    assert cls.__doc__ is not None
    with pytest.raises(EnlargeException):
        raise cls("failure")


@pytest.mark.exceptions
def test_diagnostics():
    e = EnlargeNumericalException("no convergence", diagnostics={"error": 1e-3, "path_index": 7})
    assert str(e) == "no convergence"
    assert e.diagnostics["path_index"] == 7
    assert EnlargeParameterException("bad").diagnostics == {}


@pytest.mark.exceptions
def test_config_exception_location():
    e = EnlargeConfigException("Unknown key 'colour'", line=4, field="colour")
    assert e.line == 4
    assert e.field == "colour"
    assert str(e) == "Unknown key 'colour' (line=4, field=colour)"
    assert str(EnlargeConfigException("Empty configuration")) == "Empty configuration"


@pytest.mark.exceptions
def test_top_level_exports():
    assert pyenlarge.EnlargeException is EnlargeException
    assert pyenlarge.EnlargeConfigException is EnlargeConfigException


@pytest.mark.exceptions
def test_domain_exception_from_special_functions():
    with pytest.raises(EnlargeDomainException):
        pyenlarge.special_functions.brownian_sup_cdf(0.0)
    with pytest.raises(EnlargeDomainException):
        pyenlarge.special_functions.emery_phi(1.5)


@pytest.mark.exceptions
def test_contract_exception_from_tables():
    model = pyenlarge.MarketModel(kind=pyenlarge.MODEL_BROWNIAN, sigma=1.0)
    with pytest.raises(EnlargeContractException):
        pyenlarge.special_functions.sup_law_estimator(model, pyenlarge.special_functions.SUP_KIND_FINITE_HORIZON)


@pytest.mark.exceptions
def test_base_exception_documented():
    assert "diagnostics" in EnlargeException.__doc__
