import pytest

from linkmatch.config import Settings
from linkmatch.exceptions import CnfParseError, NotFoundError, StreamParseError
from linkmatch.models.formula import CnfFormula
from linkmatch.models.gamma import GammaEdge, GammaMatching
from linkmatch.repositories import (
    CnfRepository,
    MatchingRepository,
    RecordRepository,
    StreamRepository,
)
from linkmatch.services.generator_service import GeneratorService
from tests.conftest import build_stream


@pytest.fixture
def streams(settings: Settings) -> StreamRepository:
    return StreamRepository(settings)


def test_parse_minimal_file(streams: StreamRepository):
    stream, metadata = streams.loads("0 a b\n1 a b\n")
    assert stream.edges == {(0, "a", "b"), (1, "a", "b")}
    assert (stream.t_min, stream.t_max) == (0, 1)
    assert metadata == {}


def test_parse_error_names_the_line(streams: StreamRepository):
    with pytest.raises(StreamParseError) as info:
        streams.loads("x a b\n", source="bad.txt")
    assert info.value.line == 1
    assert info.value.detail.startswith("bad.txt:1:")
    with pytest.raises(StreamParseError) as info:
        streams.loads("0 a b\n\n1 a\n")
    assert info.value.line == 3


def test_empty_body_needs_interval(streams: StreamRepository):
    with pytest.raises(StreamParseError):
        streams.loads("# note=nothing here\n")
    stream, metadata = streams.loads("# t_min=0\n# t_max=4\n# vertices=a b\n")
    assert stream.m == 0 and stream.tau == 5 and stream.vertices == {"a", "b"}


def test_header_and_metadata_round_trip(streams: StreamRepository):
    stream = build_stream([(2, "b", "a"), (3, "a", "c")], t_min=0, t_max=9, vertices=["a", "b", "c", "z"])
    text = streams.dumps(stream, {"delta": 3, "source": "unit"})
    assert text.splitlines()[:5] == [
        "# t_min=0",
        "# t_max=9",
        "# vertices=a b c z",
        "# delta=3",
        "# source=unit",
    ]
    loaded, metadata = streams.loads(text)
    assert loaded == stream
    assert metadata == {"delta": "3", "source": "unit"}


def test_generated_stream_round_trip(streams: StreamRepository, tmp_path):
    service = GeneratorService(Settings())
    stream = service.generate(
        service.default_config(group_count=8, particles_per_group=2, duration=30, arena_width=150.0, arena_height=150.0)
    )
    path = streams.save(stream, tmp_path / "generated.txt")
    assert streams.load(path) == stream


def test_relative_paths_resolve_against_dataset_dir(streams: StreamRepository, settings: Settings):
    (settings.dataset_dir / "tiny.txt").write_text("0 a b\n", encoding="utf-8")
    assert streams.load("tiny.txt").m == 1
    with pytest.raises(NotFoundError):
        streams.load("missing.txt")


def test_matching_file_round_trip(settings: Settings, tmp_path):
    repo = MatchingRepository(settings)
    matching = GammaMatching(
        gamma=2,
        members=frozenset(
            {GammaEdge(start=3, u="c", v="d", gamma=2), GammaEdge(start=0, u="b", v="a", gamma=2)}
        ),
    )
    assert repo.dumps(matching) == "# gamma=2\n0 a b 2\n3 c d 2\n"
    path = repo.save(matching, tmp_path / "m.txt")
    assert repo.load(path) == matching
    assert repo.loads(repo.dumps(GammaMatching(gamma=4))) == GammaMatching(gamma=4)


def test_matching_file_errors(settings: Settings):
    repo = MatchingRepository(settings)
    with pytest.raises(StreamParseError):
        repo.loads("0 a b\n")
    with pytest.raises(StreamParseError):
        repo.loads("0 a a 2\n")
    with pytest.raises(StreamParseError):
        repo.loads("0 a b 2\n0 c d 3\n")
    with pytest.raises(StreamParseError):
        repo.loads("")


def test_dimacs_round_trip(settings: Settings, tmp_path):
    repo = CnfRepository(settings)
    formula = repo.loads("c example\np cnf 4 2\n1 -2 3 0\n1 2 -4 0\n")
    assert formula == CnfFormula(variable_count=4, clauses=((1, -2, 3), (1, 2, -4)))
    path = repo.save(formula, tmp_path / "f.cnf")
    assert repo.load(path) == formula


def test_dimacs_with_long_clause_is_rejected(settings: Settings):
    with pytest.raises(CnfParseError):
        CnfRepository(settings).loads("p cnf 4 1\n1 2 3 4 0\n")


def test_csv_records(settings: Settings, tmp_path):
    repo = RecordRepository(settings)
    rows = [{"delta": 2, "gamma": 3, "ratio": None}, {"delta": 4, "gamma": 1, "ratio": 0.5}]
    text = repo.dumps_csv(rows, ["delta", "gamma", "ratio"])
    assert text == "delta,gamma,ratio\n2,3,\n4,1,0.5\n"
    path = repo.save_csv(rows, ["delta", "gamma", "ratio"], tmp_path / "out.csv")
    assert repo.load_csv(path)[1] == {"delta": "4", "gamma": "1", "ratio": "0.5"}
