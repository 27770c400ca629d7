from pathlib import Path

from pydantic import ValidationError

from linkmatch.exceptions import StreamParseError
from linkmatch.models.gamma import GammaEdge, GammaMatching
from linkmatch.repositories.base import BaseFileRepository


class MatchingRepository(BaseFileRepository):
    """Gamma-matchings as "t u v gamma" lines, one gamma-edge per line.

    A ``# gamma=N`` header carries gamma so empty matchings survive a round trip.
    """

    resource = "Matching file"

    def loads(self, text: str, source: str | None = None) -> GammaMatching:
        gamma: int | None = None
        members = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, sep, value = line[1:].strip().partition("=")
                if sep and key.strip() == "gamma":
                    try:
                        gamma = int(value)
                    except ValueError:
                        raise StreamParseError(
                            f"gamma '{value.strip()}' is not an integer", number, source
                        ) from None
                continue
            fields = line.split()
            if len(fields) != 4:
                raise StreamParseError(
                    f"expected 't u v gamma', got {len(fields)} fields", number, source
                )
            try:
                members.append(
                    GammaEdge(
                        start=int(fields[0]), u=fields[1], v=fields[2], gamma=int(fields[3])
                    )
                )
            except (ValueError, ValidationError) as exc:
                raise StreamParseError(str(exc).splitlines()[0], number, source) from None
        if gamma is None:
            if not members:
                raise StreamParseError("no gamma-edges and no gamma header", None, source)
            gamma = members[0].gamma
        try:
            return GammaMatching(gamma=gamma, members=frozenset(members))
        except ValidationError:
            raise StreamParseError(f"gamma-edges differ from gamma={gamma}", None, source) from None

    def dumps(self, matching: GammaMatching) -> str:
        lines = [f"# gamma={matching.gamma}"]
        lines.extend(
            f"{e.start} {e.u} {e.v} {e.gamma}" for e in matching.sorted_members()
        )
        return "\n".join(lines) + "\n"

    def load(self, path: str | Path) -> GammaMatching:
        resolved, text = self.read_text(path)
        return self.loads(text, str(resolved))

    def save(self, matching: GammaMatching, path: str | Path) -> Path:
        return self.write_text(path, self.dumps(matching))
