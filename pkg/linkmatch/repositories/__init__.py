from linkmatch.repositories.cnf_repo import CnfRepository
from linkmatch.repositories.matching_repo import MatchingRepository
from linkmatch.repositories.record_repo import RecordRepository
from linkmatch.repositories.stream_repo import StreamRepository

__all__ = [
    "StreamRepository",
    "MatchingRepository",
    "CnfRepository",
    "RecordRepository",
]
