"""Request models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

VariantName = Literal["intersection", "product", "both"]


class AnalyzeRequest(BaseModel):
    script: str = Field(description="ring-definition script")
    ring: str = Field(description="name of the ring to analyze")


class VerifyRequest(BaseModel):
    script: str
    ring: str
    claims: list[str] | None = Field(
        default=None, description="claim ids; omit or ['all'] for every claim"
    )
    variant: VariantName | None = Field(
        default=None, description="hypothesis variant; omit for per-claim defaults"
    )


class CorpusRequest(BaseModel):
    claims: list[str] | None = None
    variant: VariantName | None = None


class LatticeRequest(BaseModel):
    script: str
    ring: str
    which: Literal["bz", "bzo"]


class SpectrumRequest(BaseModel):
    script: str
    ring: str
