"""Minimal client for OpenAI-compatible chat endpoints.

Tests and offline runs use recorded responses (``replay``). Live requests
only happen when ``MBL_LIVE=1`` is set; the API token is read from the
environment at call time and never stored or logged.
"""
from __future__ import annotations

import json
import logging
import os
import re
from dataclasses import dataclass
from pathlib import Path

import httpx

from ..dsl.printer import fmt_value
from ..dsl.signatures import SIGNATURES

log = logging.getLogger(__name__)

LIVE_ENV = "MBL_LIVE"
DEFAULT_TEMPLATE = Path(__file__).with_name("prompt_template.txt")


class ModelError(RuntimeError):
    def __init__(self, message: str, retry_after: float | None = None, status: int | None = None):
        super().__init__(message)
        self.retry_after = retry_after
        self.status = status


@dataclass(frozen=True)
class ModelEndpointConfig:
    base_url: str = "http://localhost:8000/v1"
    model: str = "layout-coder"
    token_env: str = "MBL_API_TOKEN"
    temperature: float = 0.0
    max_tokens: int = 2048
    timeout: float = 60.0

    def __post_init__(self):
        if not 0.0 <= self.temperature <= 2.0:
            raise ValueError(f"temperature must lie in [0, 2], got {self.temperature}")
        if self.max_tokens <= 0:
            raise ValueError("max_tokens must be positive")


def action_reference() -> str:
    """One line per action form, listing parameters and defaults."""
    lines = []
    for s in SIGNATURES:
        ps = ", ".join(p.name + ("" if p.required else f" = {fmt_value(p.default)}" if p.has_default else "?")
                       for p in s.params)
        lines.append(f"- {s.callee}({ps})" + (f" -> {s.result}" if s.result else ""))
    return "\n".join(lines)


def render_prompt(description: str, template: str | None = None) -> str:
    text = template if template is not None else DEFAULT_TEMPLATE.read_text(encoding="utf-8")
    return text.replace("{actions}", action_reference()).replace("{description}", description.strip())


def extract_code(reply: str) -> str:
    """Strip a surrounding Markdown code fence, if any."""
    m = re.search(r"```[a-zA-Z#]*\n(.*?)```", reply, re.S)
    return (m.group(1) if m else reply).strip() + "\n"


class ModelClient:
    def __init__(self, endpoint: ModelEndpointConfig | None = None, replay: dict[str, str] | None = None,
                 live: bool | None = None, transport: httpx.BaseTransport | None = None):
        self.endpoint = endpoint or ModelEndpointConfig()
        self.replay = replay
        self.live = os.environ.get(LIVE_ENV) == "1" if live is None else live
        self.transport = transport

    @classmethod
    def from_fixture(cls, path, endpoint: ModelEndpointConfig | None = None) -> "ModelClient":
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        return cls(endpoint, replay=data.get("responses", data), live=False)

    def payload(self, prompt: str) -> dict:
        e = self.endpoint
        return {"model": e.model, "messages": [{"role": "user", "content": prompt}],
                "temperature": e.temperature, "max_tokens": e.max_tokens}

    def generate(self, description: str, template: str | None = None) -> str:
        if self.replay is not None and description in self.replay:
            return extract_code(self.replay[description])
        if not self.live:
            raise ModelError(f"no recorded response and live mode is off (set {LIVE_ENV}=1)")
        return extract_code(self._post(render_prompt(description, template)))

    def _post(self, prompt: str) -> str:
        e = self.endpoint
        token = os.environ.get(e.token_env)
        headers = {"Content-Type": "application/json"}
        if token:
            headers["Authorization"] = f"Bearer {token}"
        url = e.base_url.rstrip("/") + "/chat/completions"
        log.info("POST %s model=%s temperature=%s", url, e.model, e.temperature)
        try:
            with httpx.Client(timeout=e.timeout, transport=self.transport) as client:
                resp = client.post(url, json=self.payload(prompt), headers=headers)
        except httpx.HTTPError as exc:
            raise ModelError(f"transport error: {type(exc).__name__}") from None
        if resp.status_code != 200:
            ra = resp.headers.get("retry-after")
            try:
                retry = float(ra) if ra is not None else None
            except ValueError:
                retry = None
            raise ModelError(f"endpoint returned HTTP {resp.status_code}", retry, resp.status_code)
        try:
            return resp.json()["choices"][0]["message"]["content"]
        except (KeyError, IndexError, ValueError):
            raise ModelError("malformed response body", status=resp.status_code) from None
