import pytest

from arqid.lexicon import builtin_lexicon_path, load_lexicon


@pytest.fixture(scope="session")
def lex():
    """The small lexicon bundled with the package."""
    return load_lexicon(builtin_lexicon_path())
