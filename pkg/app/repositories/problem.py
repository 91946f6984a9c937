from app.repositories.base import BaseRepo
from app.schemas.problem import ControllersDocument, ProblemDocument


class ProblemRepo(BaseRepo[ProblemDocument]):
    document_class = ProblemDocument


class ControllersRepo(BaseRepo[ControllersDocument]):
    document_class = ControllersDocument
