from functools import lru_cache

from ..core.config import get_settings
from ..services.commands import CommandService
from ..services.document_codec import DocumentCodec


@lru_cache()
def get_document_codec() -> DocumentCodec:
    return DocumentCodec()


def get_command_service() -> CommandService:
    return CommandService(codec=get_document_codec(), settings=get_settings())
