"""Publication records from CSV/JSONL and author-rank resolution.

CSV needs a header row.  Recognised columns are ``id, year, citations,
authors, rank_override, alphabetical`` plus an optional ``title``;
``authors`` holds a ``;``-separated ordered list.  Trailing optional
fields may be left off a row.  JSONL carries one object per line with the
same keys, ``authors`` as an array.
"""
from __future__ import annotations

import csv
import io
import json
import re
import unicodedata
import warnings
from dataclasses import dataclass
from typing import IO, Iterable, Sequence, Union

from .career import CareerPaper, CareerRecord
from .errors import (
    AlphabeticalOrderWarning,
    AmbiguousAuthorError,
    EmptyInputError,
    ParseError,
    ResearcherNotAuthorError,
    ValidationError,
)
from .metrics import RankedPaper

CSV_COLUMNS = ("id", "year", "citations", "authors", "rank_override", "alphabetical")
REQUIRED_COLUMNS = ("id", "year", "citations", "authors")
FORMATS = ("csv", "jsonl")


@dataclass(frozen=True)
class Publication:
    id: str
    year: int
    authors: tuple[str, ...]
    citations: int
    title: str | None = None
    rank_override: int | None = None
    alphabetical: bool = False

    def __post_init__(self):
        object.__setattr__(self, "authors", tuple(self.authors))
        if not self.id:
            raise ValidationError("publication id is empty")
        if not self.authors or any(not a.strip() for a in self.authors):
            raise ValidationError(f"{self.id}: author list is empty or has a blank name")
        if self.citations < 0:
            raise ValidationError(f"{self.id}: negative citation count {self.citations}")
        if self.rank_override is not None and not 1 <= self.rank_override <= len(self.authors):
            raise ValidationError(
                f"{self.id}: rank_override {self.rank_override} outside 1..{len(self.authors)}"
            )


def normalize_name(name: str) -> str:
    name = unicodedata.normalize("NFC", name).replace(".", " ")
    return re.sub(r"\s+", " ", name).strip().lower()


@dataclass(frozen=True)
class ResearcherProfile:
    canonical_name: str
    aliases: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "aliases", tuple(self.aliases))
        if not normalize_name(self.canonical_name):
            raise ValidationError("profile canonical_name is empty")
        seen = set()
        for alias in self.aliases:
            key = normalize_name(alias)
            if not key or key in seen:
                raise ValidationError(f"profile alias {alias!r} is empty or duplicated")
            seen.add(key)

    @property
    def keys(self) -> frozenset[str]:
        return frozenset([normalize_name(self.canonical_name), *map(normalize_name, self.aliases)])


def load_profile(source: Union[str, bytes, IO]) -> ResearcherProfile:
    text = _read_text(source)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"profile is not valid JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(obj, dict) or not isinstance(obj.get("canonical_name"), str):
        raise ParseError("profile must be an object with a string canonical_name")
    aliases = obj.get("aliases", [])
    if not isinstance(aliases, list) or not all(isinstance(a, str) for a in aliases):
        raise ParseError("profile aliases must be an array of strings")
    return ResearcherProfile(obj["canonical_name"], tuple(aliases))


def _read_text(source) -> str:
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc.reason}") from None
    return source


def _int(value, field, line, allow_blank=False):
    if isinstance(value, str):
        value = value.strip()
        if value == "" and allow_blank:
            return None
        if re.fullmatch(r"[+-]?\d+", value):
            return int(value)
    elif value is None and allow_blank:
        return None
    elif isinstance(value, int) and not isinstance(value, bool):
        return value
    raise ParseError(f"{field} must be an integer, got {value!r}", line=line)


def _bool(value, line):
    if isinstance(value, bool):
        return value
    if value is None:
        return False
    if isinstance(value, str) and value.strip().lower() in ("", "true", "false"):
        return value.strip().lower() == "true"
    raise ParseError(f"alphabetical must be true or false, got {value!r}", line=line)


def _make(line, **fields) -> Publication:
    try:
        return Publication(**fields)
    except ValidationError as exc:
        raise ValidationError(str(exc), line=line) from None


def _parse_csv(text: str) -> list[Publication]:
    reader = csv.reader(io.StringIO(text, newline=""))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty input: header row required", line=1) from None
    except csv.Error as exc:
        raise ParseError(str(exc), line=1) from None
    header = [h.strip() for h in header]
    missing = [c for c in REQUIRED_COLUMNS if c not in header]
    if missing:
        raise ParseError(f"header missing columns: {', '.join(missing)}", line=1)
    out = []
    while True:
        try:
            row = next(reader)
        except StopIteration:
            break
        except csv.Error as exc:
            raise ParseError(str(exc), line=reader.line_num) from None
        line = reader.line_num
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) > len(header):
            raise ParseError(f"expected at most {len(header)} fields, got {len(row)}", line=line)
        rec = dict(zip(header, row))
        for col in REQUIRED_COLUMNS:
            if col not in rec:
                raise ParseError(f"missing field {col}", line=line)
        authors = [a.strip() for a in rec["authors"].split(";")] if rec["authors"].strip() else []
        out.append(
            _make(
                line,
                id=rec["id"].strip(),
                year=_int(rec["year"], "year", line),
                citations=_int(rec["citations"], "citations", line),
                authors=tuple(authors),
                title=rec.get("title") or None,
                rank_override=_int(rec.get("rank_override", ""), "rank_override", line, allow_blank=True),
                alphabetical=_bool(rec.get("alphabetical", ""), line),
            )
        )
    return out


def _parse_jsonl(text: str) -> list[Publication]:
    out = []
    for line, raw in enumerate(text.split("\n"), 1):
        if not raw.strip():
            continue
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=line) from None
        if not isinstance(obj, dict):
            raise ParseError("record must be a JSON object", line=line)
        for key in REQUIRED_COLUMNS:
            if key not in obj:
                raise ParseError(f"missing key {key}", line=line)
        authors = obj["authors"]
        if not isinstance(authors, list) or not all(isinstance(a, str) for a in authors):
            raise ParseError("authors must be an array of strings", line=line)
        title = obj.get("title")
        if title is not None and not isinstance(title, str):
            raise ParseError("title must be a string", line=line)
        if not isinstance(obj["id"], str):
            raise ParseError("id must be a string", line=line)
        out.append(
            _make(
                line,
                id=obj["id"],
                year=_int(obj["year"], "year", line),
                citations=_int(obj["citations"], "citations", line),
                authors=tuple(authors),
                title=title,
                rank_override=_int(obj.get("rank_override"), "rank_override", line, allow_blank=True),
                alphabetical=_bool(obj.get("alphabetical"), line),
            )
        )
    return out


def parse_publications(source: Union[str, bytes, IO], format: str = "csv") -> list[Publication]:
    """Parse publications, preserving order; ids must be unique."""
    if format not in FORMATS:
        raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")
    text = _read_text(source)
    pubs = _parse_csv(text) if format == "csv" else _parse_jsonl(text)
    seen = set()
    for pub in pubs:
        if pub.id in seen:
            raise ValidationError(f"duplicate publication id {pub.id!r}")
        seen.add(pub.id)
    return pubs


def guess_format(path: str) -> str:
    return "jsonl" if path.lower().endswith((".jsonl", ".ndjson")) else "csv"


def serialize_publications(pubs: Iterable[Publication], format: str = "csv") -> str:
    pubs = list(pubs)
    buf = io.StringIO(newline="")
    if format == "csv":
        cols = list(CSV_COLUMNS)
        if any(p.title is not None for p in pubs):
            cols.append("title")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        for p in pubs:
            if any(";" in a for a in p.authors):
                raise ValidationError(f"{p.id}: author name contains ';', not representable in CSV")
            row = [
                p.id,
                p.year,
                p.citations,
                "; ".join(p.authors),
                "" if p.rank_override is None else p.rank_override,
                "true" if p.alphabetical else "false",
            ]
            if "title" in cols:
                row.append(p.title or "")
            writer.writerow(row)
    elif format == "jsonl":
        for p in pubs:
            obj = {"id": p.id, "year": p.year, "citations": p.citations, "authors": list(p.authors)}
            if p.title is not None:
                obj["title"] = p.title
            if p.rank_override is not None:
                obj["rank_override"] = p.rank_override
            if p.alphabetical:
                obj["alphabetical"] = True
            buf.write(json.dumps(obj, ensure_ascii=False) + "\n")
    else:
        raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")
    return buf.getvalue()


def _resolve(pub: Publication, profile: ResearcherProfile):
    if pub.rank_override is not None:
        return pub.rank_override, None
    keys = profile.keys
    hits = [i for i, name in enumerate(pub.authors, 1) if normalize_name(name) in keys]
    if not hits:
        raise ResearcherNotAuthorError(
            f"{pub.id}: {profile.canonical_name!r} not found among authors", pub_id=pub.id
        )
    if len(hits) > 1:
        raise AmbiguousAuthorError(
            f"{pub.id}: {profile.canonical_name!r} matches authors at positions {hits}", pub_id=pub.id
        )
    rank = hits[0]
    warning = AlphabeticalOrderWarning(pub.id, rank) if pub.alphabetical else None
    return rank, warning


def resolve_author_rank(pub: Publication, profile: ResearcherProfile) -> int:
    """1-based position of the researcher in ``pub.authors``.

    An explicit ``rank_override`` wins.  Names are compared after
    normalisation; no match and several matches are both errors.  Papers
    from alphabetically ordered venues still resolve, with an
    :class:`AlphabeticalOrderWarning`.
    """
    rank, warning = _resolve(pub, profile)
    if warning is not None:
        warnings.warn(warning, stacklevel=2)
    return rank


def build_career(
    pubs: Sequence[Publication], profile: ResearcherProfile, snapshot_year: int | None = None
) -> CareerRecord:
    """Resolve every publication and assemble a career record.

    ``snapshot_year`` defaults to the latest publication year.
    """
    if not pubs:
        raise EmptyInputError("no publications to build a career from")
    if snapshot_year is None:
        snapshot_year = max(p.year for p in pubs)
    papers = []
    found = []
    for pub in pubs:
        if pub.year > snapshot_year:
            raise ValidationError(f"{pub.id}: published {pub.year}, after snapshot year {snapshot_year}")
        rank, warning = _resolve(pub, profile)
        if warning is not None:
            found.append(warning)
        papers.append(CareerPaper(pub.year, RankedPaper(pub.citations, rank), pub.id, pub.alphabetical))
    return CareerRecord(tuple(papers), snapshot_year, tuple(found))
