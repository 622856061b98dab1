import pytest

from liecp.rootsys import build, supported_types


@pytest.fixture(params=supported_types(), ids=lambda t: f"{t[0]}{t[1]}")
def any_rs(request):
    return build(*request.param)


@pytest.fixture(params=[t for t in supported_types() if t[1] <= 6], ids=lambda t: f"{t[0]}{t[1]}")
def rs(request):
    return build(*request.param)
