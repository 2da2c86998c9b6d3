import pytest

from meadowacp import default_context


SAMPLE_SPEC = """
act a, b, c;
comm a | b = c;
meadow F 3;
set H = {a, b};
proc P = a . b + delta;
"""


@pytest.fixture
def ctx():
    return default_context()


@pytest.fixture
def sample_spec_text():
    return SAMPLE_SPEC


@pytest.fixture
def sample_spec_path(tmp_path):
    path = tmp_path / "sample.acpm"
    path.write_text(SAMPLE_SPEC)
    return str(path)
