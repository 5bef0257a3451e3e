import json
import os
import pathlib

import pytest

SOURCE_DIR = pathlib.Path(os.environ.get("IRLAB_SOURCE_DIR", pathlib.Path(__file__).resolve().parents[2]))


@pytest.fixture(scope="session")
def source_dir():
    return SOURCE_DIR


@pytest.fixture(scope="session")
def corpus_dir():
    return SOURCE_DIR / "corpus"


@pytest.fixture(scope="session")
def report_schema():
    with open(SOURCE_DIR / "schema" / "report.schema.json") as f:
        return json.load(f)
