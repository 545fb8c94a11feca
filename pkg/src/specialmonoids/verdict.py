"""Tri-state decision result shared by the oracle backends."""

from __future__ import annotations

import enum


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    @staticmethod
    def of(flag: bool) -> "Verdict":
        return Verdict.YES if flag else Verdict.NO
