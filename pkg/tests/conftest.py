import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest

import corpusgen
from namecensus.cache import digest_corpus_files, save_cache
from namecensus.corpus import (
    find_year_files,
    load_chinese_charfreq,
    load_english_year_files,
)

DATA_DIR = Path(__file__).parent / "data"

TABLE2_NAMES = [
    "Fairouz Kamareddine",
    "Hua Zhao",
    "Alasdair J G Gray",
    "Phil Barker",
    "Lilia Georgieva",
    "赵骅",
    "赵金标",
    "王青",
    "Jim Thomson",
    "Martin Kettle",
]

TABLE4_LABELS = [
    "Female", "Female", "Male", "Male", "Female",
    "Male", "Male", "Unisex", "Male", "Male",
]


@pytest.fixture(scope="session")
def corpus_root(tmp_path_factory):
    root = tmp_path_factory.mktemp("corpus")
    corpusgen.write_corpus(root)
    return root


@pytest.fixture(scope="session")
def english_dir(corpus_root):
    return corpus_root / "english"


@pytest.fixture(scope="session")
def chinese_csv(corpus_root):
    return corpus_root / "chinese_charfreq.csv"


@pytest.fixture(scope="session")
def full_models(english_dir, chinese_csv):
    return load_english_year_files(english_dir), load_chinese_charfreq(chinese_csv)


@pytest.fixture(scope="session")
def cache_path(corpus_root, full_models, english_dir, chinese_csv):
    english, chinese = full_models
    path = corpus_root / "models.ncm"
    digest = digest_corpus_files(find_year_files(english_dir) + [chinese_csv])
    save_cache(english, chinese, path, source_digest=digest)
    return path
