import pytest

from credalarg.formats import emit_caf
from credalarg.samples import diagnosis_document


@pytest.fixture(scope="session")
def diagnosis():
    return diagnosis_document()


@pytest.fixture()
def diagnosis_caf(tmp_path, diagnosis):
    path = tmp_path / "diagnosis.caf"
    path.write_text(emit_caf(diagnosis))
    return str(path)
