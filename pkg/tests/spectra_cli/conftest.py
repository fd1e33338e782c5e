import pytest

from src.spectra_cli.app.core.config import Settings
from src.spectra_cli.app.services.commands import CommandService
from src.spectra_cli.app.services.document_codec import DocumentCodec
from tests.shared_fixtures import SharedDocumentFixtures


@pytest.fixture
def settings() -> Settings:
    return Settings(_env_file=None)


@pytest.fixture
def codec() -> DocumentCodec:
    return DocumentCodec()


@pytest.fixture
def service(codec, settings) -> CommandService:
    return CommandService(codec=codec, settings=settings)


@pytest.fixture
def load_graph(codec):
    """Parse a shipped fixture document by file name."""

    def load(name: str):
        return codec.parse(SharedDocumentFixtures.load(name))

    return load


@pytest.fixture
def fixture_path():
    def path(name: str) -> str:
        return str(SharedDocumentFixtures.path(name))

    return path


@pytest.fixture(autouse=True)
def quiet_logging(mocker):
    # main() would otherwise point loguru at pytest's captured stderr
    return mocker.patch("src.spectra_cli.main.configure_logging")
