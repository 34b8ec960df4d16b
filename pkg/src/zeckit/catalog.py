"""The shipped catalog of identities and a checker that runs every entry."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .identities import IdentityPattern, Verdict, verify_numeric, verify_symbolic

NUMERIC_SPAN = 50

OK = "ok"
FAILED = "failed"
ERRATUM = "erratum-detected"


@dataclass(frozen=True)
class CatalogEntry:
    tag: str
    pattern: IdentityPattern
    erratum: bool = False
    group: str = ""
    expected_witness: dict | None = None


@dataclass(frozen=True)
class EntryResult:
    entry: CatalogEntry
    symbolic: Verdict
    numeric: Verdict
    status: str

    def to_json(self) -> dict:
        return {
            "tag": self.entry.tag,
            "identity": self.entry.pattern.to_json(),
            "erratum": self.entry.erratum,
            "symbolic": self.symbolic.to_json(),
            "numeric": self.numeric.to_json(),
            "status": self.status,
        }


def load_catalog(path: str | Path | None = None) -> list[CatalogEntry]:
    if path is None:
        text = resources.files("zeckit").joinpath("data/catalog.json").read_text()
    else:
        text = Path(path).read_text()
    entries = []
    for item in json.loads(text):
        entries.append(
            CatalogEntry(
                tag=item["tag"],
                pattern=IdentityPattern.from_json(item),
                erratum=bool(item.get("erratum", False)),
                group=item.get("group", ""),
                expected_witness=item.get("witness"),
            )
        )
    return entries


def check_entry(entry: CatalogEntry, span: int = NUMERIC_SPAN) -> EntryResult:
    p = entry.pattern
    symbolic = verify_symbolic(p) if p.family.is_second_order else Verdict(False, "symbolic")
    numeric = verify_numeric(p, p.min_n, p.min_n + span)
    holds = numeric.holds and (symbolic.holds or not p.family.is_second_order)
    if holds:
        status = OK
    elif entry.erratum:
        status = ERRATUM
    else:
        status = FAILED
    return EntryResult(entry, symbolic, numeric, status)


def check_catalog(entries: list[CatalogEntry] | None = None, span: int = NUMERIC_SPAN) -> list[EntryResult]:
    if entries is None:
        entries = load_catalog()
    return [check_entry(e, span) for e in entries]
