from pathlib import Path

from linkmatch.exceptions import BadRequestError, StreamParseError
from linkmatch.models.stream import LinkStream, normalize_edge
from linkmatch.repositories.base import BaseFileRepository

RESERVED_KEYS = {"t_min", "t_max", "vertices"}


class StreamRepository(BaseFileRepository):
    """Reads and writes link streams in the "t u v" text format.

    Optional header lines ``# key=value`` come first: ``t_min`` and ``t_max``
    override the inferred interval, ``vertices`` lists the vertex set
    (whitespace separated) so isolated vertices survive a round trip; other
    keys are kept as metadata.
    """

    resource = "Stream file"

    def loads(self, text: str, source: str | None = None) -> tuple[LinkStream, dict[str, str]]:
        header: dict[str, str] = {}
        edges = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, sep, value = line[1:].strip().partition("=")
                if sep:
                    header[key.strip()] = value.strip()
                continue
            fields = line.split()
            if len(fields) != 3:
                raise StreamParseError(
                    f"expected 't u v', got {len(fields)} fields", number, source
                )
            try:
                t = int(fields[0])
            except ValueError:
                raise StreamParseError(
                    f"time '{fields[0]}' is not an integer", number, source
                ) from None
            edges.append(normalize_edge(t, fields[1], fields[2]))

        try:
            t_min = int(header["t_min"]) if "t_min" in header else None
            t_max = int(header["t_max"]) if "t_max" in header else None
        except ValueError as exc:
            raise StreamParseError(f"bad interval header: {exc}", None, source) from None
        vertices = None
        if "vertices" in header:
            vertices = set(header["vertices"].split())
            vertices.update(x for _, u, v in edges for x in (u, v))
        try:
            stream = LinkStream.from_edges(edges, vertices, t_min, t_max)
        except BadRequestError as exc:
            raise StreamParseError(exc.detail, None, source) from None
        metadata = {k: v for k, v in header.items() if k not in RESERVED_KEYS}
        return stream, metadata

    def dumps(self, stream: LinkStream, metadata: dict[str, object] | None = None) -> str:
        lines = [f"# t_min={stream.t_min}", f"# t_max={stream.t_max}"]
        lines.append(f"# vertices={' '.join(sorted(stream.vertices))}")
        for key, value in sorted((metadata or {}).items()):
            lines.append(f"# {key}={value}")
        lines.extend(f"{t} {u} {v}" for t, u, v in stream.sorted_edges())
        return "\n".join(lines) + "\n"

    def load(self, path: str | Path) -> LinkStream:
        return self.load_with_metadata(path)[0]

    def load_with_metadata(self, path: str | Path) -> tuple[LinkStream, dict[str, str]]:
        resolved, text = self.read_text(path)
        return self.loads(text, str(resolved))

    def save(
        self,
        stream: LinkStream,
        path: str | Path,
        metadata: dict[str, object] | None = None,
    ) -> Path:
        return self.write_text(path, self.dumps(stream, metadata))
