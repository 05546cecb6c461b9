import pytest


@pytest.fixture(autouse=True)
def isolated_data_dir(tmp_path, monkeypatch):
    """Every test gets its own ISCHUR_DATA_DIR and no thread override"""
    data_dir = tmp_path / "ischur_data"
    monkeypatch.setenv("ISCHUR_DATA_DIR", str(data_dir))
    monkeypatch.delenv("ISCHUR_THREADS", raising=False)
    return data_dir
