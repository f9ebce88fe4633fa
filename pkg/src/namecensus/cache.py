"""Versioned binary cache for the two trained models (.ncm files).

Layout: magic, format version, source-corpus digest, payload digest,
then two length-prefixed JSON sections (english, chinese). The payload
digest catches corruption; the source digest catches staleness.
"""

from __future__ import annotations

import hashlib
import json
import struct
from dataclasses import dataclass
from pathlib import Path

from namecensus.corpus import ChineseCharModel, EnglishNameModel
from namecensus.errors import (
    CacheDigestError,
    CacheFormatError,
    CacheTruncatedError,
    CacheVersionError,
)

MAGIC = b"NCMC"
FORMAT_VERSION = 1
_HEADER = struct.Struct("<4sI32s32s")


@dataclass(frozen=True)
class ModelCache:
    format_version: int
    english: EnglishNameModel
    chinese: ChineseCharModel
    source_digest: str


def digest_corpus_files(paths: list[Path]) -> str:
    """Order-independent content hash of the input corpus files."""
    h = hashlib.sha256()
    for path in sorted(paths, key=lambda p: p.name):
        h.update(path.name.encode("utf-8"))
        h.update(b"\x00")
        h.update(path.read_bytes())
        h.update(b"\x00")
    return h.hexdigest()


def _encode_english(model: EnglishNameModel) -> bytes:
    doc = {
        "entries": {k: list(v) for k, v in sorted(model.entries.items())},
        "total_female": model.total_female,
        "total_male": model.total_male,
    }
    return json.dumps(doc, ensure_ascii=False, separators=(",", ":")).encode("utf-8")


def _encode_chinese(model: ChineseCharModel) -> bytes:
    doc = {
        "entries": {k: list(v) for k, v in sorted(model.entries.items())},
        "total_female": model.total_female,
        "total_male": model.total_male,
        "smoothing_alpha": model.smoothing_alpha,
    }
    return json.dumps(doc, ensure_ascii=False, separators=(",", ":")).encode("utf-8")


def save_cache(
    english: EnglishNameModel,
    chinese: ChineseCharModel,
    path: str | Path,
    source_digest: str = "",
) -> None:
    sections = [_encode_english(english), _encode_chinese(chinese)]
    payload = b"".join(struct.pack("<Q", len(s)) + s for s in sections)
    header = _HEADER.pack(
        MAGIC,
        FORMAT_VERSION,
        bytes.fromhex(source_digest) if source_digest else b"\x00" * 32,
        hashlib.sha256(payload).digest(),
    )
    Path(path).write_bytes(header + struct.pack("<Q", len(payload)) + payload)


def read_source_digest(path: str | Path) -> str:
    """Source digest from the header alone, for staleness checks."""
    header = _read_header(Path(path).read_bytes()[: _HEADER.size])
    return header[2].hex()


def _read_header(blob: bytes) -> tuple:
    if len(blob) < _HEADER.size:
        raise CacheTruncatedError("cache file shorter than its header")
    magic, version, source_digest, payload_digest = _HEADER.unpack(blob[: _HEADER.size])
    if magic != MAGIC:
        raise CacheFormatError(f"not a model cache (magic {magic!r})")
    if version != FORMAT_VERSION:
        raise CacheVersionError(
            f"cache format version {version}, this build supports {FORMAT_VERSION}"
        )
    return magic, version, source_digest, payload_digest


def load_cache(path: str | Path) -> ModelCache:
    blob = Path(path).read_bytes()
    _, version, source_digest, payload_digest = _read_header(blob)
    offset = _HEADER.size
    if len(blob) < offset + 8:
        raise CacheTruncatedError("cache file ends before payload length")
    (payload_len,) = struct.unpack_from("<Q", blob, offset)
    offset += 8
    payload = blob[offset : offset + payload_len]
    if len(payload) != payload_len:
        raise CacheTruncatedError(
            f"payload is {len(payload)} bytes, header promised {payload_len}"
        )
    if hashlib.sha256(payload).digest() != payload_digest:
        raise CacheDigestError("cache payload digest mismatch (corrupted file)")
    sections = []
    pos = 0
    for _ in range(2):
        (length,) = struct.unpack_from("<Q", payload, pos)
        pos += 8
        sections.append(payload[pos : pos + length])
        pos += length
    english_doc = json.loads(sections[0].decode("utf-8"))
    chinese_doc = json.loads(sections[1].decode("utf-8"))
    english = EnglishNameModel(
        entries={k: (v[0], v[1]) for k, v in english_doc["entries"].items()},
        total_female=english_doc["total_female"],
        total_male=english_doc["total_male"],
    )
    chinese = ChineseCharModel(
        entries={k: (v[0], v[1]) for k, v in chinese_doc["entries"].items()},
        total_female=chinese_doc["total_female"],
        total_male=chinese_doc["total_male"],
        smoothing_alpha=chinese_doc["smoothing_alpha"],
    )
    return ModelCache(
        format_version=version,
        english=english,
        chinese=chinese,
        source_digest=source_digest.hex(),
    )
