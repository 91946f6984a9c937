import json
from pathlib import Path
from typing import Generic, Type, TypeVar

import pydantic
from pydantic import BaseModel

from app.exceptions import ParseError

DocumentType = TypeVar("DocumentType", bound=BaseModel)


def _field_path(loc: tuple) -> str:
    return ".".join(str(part) for part in loc) or "<root>"


class BaseRepo(Generic[DocumentType]):
    document_class: Type[DocumentType]

    def __init__(self, root: Path | None = None) -> None:
        self.root = root

    def resolve(self, path: str | Path) -> Path:
        path = Path(path)
        if self.root is not None and not path.is_absolute():
            path = self.root / path
        return path

    def loads(self, text: str, source: str = "<string>") -> DocumentType:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{source}: line {exc.lineno}: {exc.msg}") from None
        try:
            return self.document_class.model_validate(data)
        except pydantic.ValidationError as exc:
            first = exc.errors()[0]
            raise ParseError(
                f"{source}: field {_field_path(first['loc'])}: {first['msg']}"
            ) from None

    def get(self, path: str | Path) -> DocumentType:
        path = self.resolve(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"{path}: {exc.strerror}") from None
        return self.loads(text, source=str(path))

