import csv
import io
import json
from collections.abc import Iterable, Mapping
from pathlib import Path

from linkmatch.repositories.base import BaseFileRepository


class RecordRepository(BaseFileRepository):
    """CSV tables of experiment rows and JSON metadata sidecars."""

    resource = "Record file"

    def dumps_csv(self, rows: Iterable[Mapping[str, object]], columns: list[str]) -> str:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({c: "" if row.get(c) is None else row[c] for c in columns})
        return buffer.getvalue()

    def save_csv(
        self, rows: Iterable[Mapping[str, object]], columns: list[str], path: str | Path
    ) -> Path:
        return self.write_text(path, self.dumps_csv(rows, columns))

    def load_csv(self, path: str | Path) -> list[dict[str, str]]:
        _, text = self.read_text(path)
        return list(csv.DictReader(io.StringIO(text)))

    def save_json(self, data: Mapping[str, object], path: str | Path) -> Path:
        return self.write_text(path, json.dumps(data, indent=2, sort_keys=True) + "\n")
