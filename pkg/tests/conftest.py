import pytest

from modtag.lexicon import expand_lexicon, load_seed_lexicon
from modtag.templates import compile_ruleset


@pytest.fixture(scope="session")
def seed_lexicon():
    return load_seed_lexicon()


@pytest.fixture(scope="session")
def expanded_lexicon(seed_lexicon):
    return expand_lexicon(seed_lexicon)


@pytest.fixture(scope="session")
def compiled(seed_lexicon):
    return compile_ruleset(seed_lexicon)
