from pathlib import Path

from linkmatch.config import Settings, get_settings
from linkmatch.exceptions import BadRequestError, NotFoundError


class BaseFileRepository:
    """Base repository for text files, resolving relative names against the dataset directory."""

    resource = "File"

    def __init__(self, settings: Settings | None = None):
        self.settings = settings or get_settings()

    def resolve(self, path: str | Path) -> Path:
        """Existing path as given, else relative to ``dataset_dir``."""
        candidate = Path(path)
        if candidate.exists():
            return candidate
        dataset_dir = self.settings.dataset_dir
        if dataset_dir is not None and not candidate.is_absolute():
            in_datasets = Path(dataset_dir) / candidate
            if in_datasets.exists():
                return in_datasets
        raise NotFoundError(self.resource, str(path))

    def read_text(self, path: str | Path) -> tuple[Path, str]:
        resolved = self.resolve(path)
        try:
            return resolved, resolved.read_text(encoding="utf-8")
        except UnicodeDecodeError as exc:
            raise BadRequestError(
                f"{self.resource} '{resolved}' is not UTF-8 text: {exc.reason}"
            ) from exc
        except OSError as exc:
            raise BadRequestError(
                f"cannot read {self.resource} '{resolved}': {exc.strerror or exc}"
            ) from exc

    def write_text(self, path: str | Path, text: str) -> Path:
        target = Path(path)
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(text, encoding="utf-8")
        except OSError as exc:
            raise BadRequestError(
                f"cannot write {self.resource} '{target}': {exc.strerror or exc}"
            ) from exc
        return target
