from .commands import CommandService
from .document_codec import DocumentCodec

__all__ = ["CommandService", "DocumentCodec"]
