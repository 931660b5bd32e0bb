"""Pydantic request/response models for the HTTP service.

All exact values cross the wire as canonical strings (the same text forms
the CLI grammar uses), so responses are deterministic and round-trip
bit-exactly through the series JSON schema.
"""

from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import BaseModel, Field


class SeriesPayload(BaseModel):
    group: str
    coeff: str
    terms: List[List[str]]  # [exponent, coefficient] pairs, ascending


class EvalRequest(BaseModel):
    expr: str
    group: str = "q"
    coeff: str = "q"
    bound: Optional[str] = None  # display bound for lazy results (exponent literal)


class EvalResponse(BaseModel):
    kind: Literal["series", "support", "valuation"]
    text: str
    series: Optional[SeriesPayload] = None
    truncated_below: Optional[str] = None
    support: Optional[List[str]] = None
    valuation: Optional[str] = None


class CheckRequest(BaseModel):
    model: str = "hahn"
    group: str = "q"
    coeff: str = "q"
    samples: int = Field(default=200, ge=1, le=1_000_000)
    seed: int = 0


class CheckItemPayload(BaseModel):
    axiom: str
    status: Literal["pass", "fail", "skipped"]
    samples: int
    counterexample: Optional[dict] = None
    seed: int


class CheckResponse(BaseModel):
    model: str
    group: str
    coeff: str
    seed: int
    samples: int
    passed: bool
    lemmas_diagnostic: bool
    checks: List[CheckItemPayload]


class EmbedRequest(BaseModel):
    expr: str
    group: str = "q"
    coeff: str = "q"
    max_terms: Optional[int] = Field(default=None, ge=1)
    exponent_bound: Optional[str] = None


class EmbedResponse(BaseModel):
    group: str
    coeff: str
    terms: List[List[str]]
    exhausted: bool
    terms_emitted: int
    residual_valuation: Optional[str] = None
    text: str


class ErrorInfo(BaseModel):
    kind: Literal["parse_error", "eval_error", "usage_error"]
    message: str
    position: Optional[int] = None
