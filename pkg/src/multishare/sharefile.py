"""Canonical text serialization of shares.

A share file is a header line followed by one line per share::

    multishare 1 scheme=coeff p=999961 threshold=4 k_secrets=4
    share index=3 x=3 y=156

Chunked byte secrets add ``bytes=<length>`` to the header. Numbers are
base 10 without leading zeros, fields are separated by single spaces, and
every line ends in a newline, so ``dumps(loads(text)) == text``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .errors import MixedShares, NotPrime, ShareFormatError
from .field import PrimeModulus
from .schemes import Scheme, Share

FORMAT_VERSION = 1

_NUM = r"(0|[1-9][0-9]*)"
_HEADER = re.compile(
    rf"multishare (?P<version>{_NUM}) scheme=(?P<scheme>shamir|points|coeff) p=(?P<p>{_NUM}) "
    rf"threshold=(?P<threshold>{_NUM}) k_secrets=(?P<k>{_NUM})(?: bytes=(?P<length>{_NUM}))?"
)
_SHARE = re.compile(rf"share index=(?P<index>{_NUM}) x=(?P<x>{_NUM}) y=(?P<y>{_NUM})")


@dataclass(frozen=True)
class ShareLine:
    index: int
    x: int
    y: int


@dataclass
class ShareFile:
    scheme: Scheme
    p: int
    threshold: int
    k_secrets: int
    shares: list[ShareLine] = field(default_factory=list)
    length: int | None = None

    def header(self) -> str:
        line = (
            f"multishare {FORMAT_VERSION} scheme={self.scheme.value} p={self.p} "
            f"threshold={self.threshold} k_secrets={self.k_secrets}"
        )
        if self.length is not None:
            line += f" bytes={self.length}"
        return line

    def dumps(self) -> str:
        lines = [self.header()]
        lines += [f"share index={s.index} x={s.x} y={s.y}" for s in self.shares]
        return "\n".join(lines) + "\n"

    def to_shares(self) -> list[Share]:
        try:
            F = PrimeModulus(self.p)
        except NotPrime as exc:
            raise ShareFormatError(str(exc)) from exc
        out = []
        for s in self.shares:
            if s.x >= self.p or s.y >= self.p:
                raise ShareFormatError(f"share {s.index} has a coordinate outside Z_{self.p}")
            try:
                out.append(Share(self.scheme, F, self.threshold, F(s.x), F(s.y)))
            except ValueError as exc:
                raise ShareFormatError(f"share {s.index}: {exc}") from exc
        return out

    @classmethod
    def from_shares(cls, shares: Sequence[Share], k_secrets: int, indices: Sequence[int] | None = None,
                    length: int | None = None) -> ShareFile:
        if not shares:
            raise ShareFormatError("nothing to serialize")
        first = shares[0]
        if any(s.scheme is not first.scheme or s.modulus != first.modulus
               or s.threshold != first.threshold for s in shares):
            raise MixedShares("a share file holds shares of a single sharing")
        if indices is None:
            indices = range(1, len(shares) + 1)
        lines = [ShareLine(i, s.x.value, s.y.value) for i, s in zip(indices, shares, strict=True)]
        return cls(first.scheme, first.modulus.p, first.threshold, k_secrets, lines, length)


def loads(text: str) -> ShareFile:
    if not text.endswith("\n"):
        raise ShareFormatError("share file must end with a newline")
    lines = text[:-1].split("\n")
    m = _HEADER.fullmatch(lines[0])
    if m is None:
        raise ShareFormatError(f"bad header line: {lines[0]!r}")
    if int(m["version"]) != FORMAT_VERSION:
        raise ShareFormatError(f"unsupported format version {m['version']}")
    shares = []
    for line in lines[1:]:
        sm = _SHARE.fullmatch(line)
        if sm is None:
            raise ShareFormatError(f"bad share line: {line!r}")
        shares.append(ShareLine(int(sm["index"]), int(sm["x"]), int(sm["y"])))
    length = int(m["length"]) if m["length"] is not None else None
    return ShareFile(Scheme(m["scheme"]), int(m["p"]), int(m["threshold"]), int(m["k"]), shares, length)


def read(path: str | Path) -> ShareFile:
    try:
        text = Path(path).read_text(encoding="ascii")
    except UnicodeDecodeError as exc:
        raise ShareFormatError(f"{path}: not an ASCII share file") from exc
    return loads(text)


def write(path: str | Path, share_file: ShareFile) -> None:
    Path(path).write_text(share_file.dumps(), encoding="ascii", newline="\n")
