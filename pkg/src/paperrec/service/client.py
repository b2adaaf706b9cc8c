"""Client used by the CLI: talks to a remote server or runs the app in-process."""

from __future__ import annotations

import asyncio
from typing import Any

import httpx

from ..errors import IoFailure, PaperRecError
from .state import ServiceConfig

_TIMEOUT = 300.0


class RemoteServiceError(PaperRecError):
    """A structured error response relayed from the service."""

    def __init__(self, status: int, data: dict):
        super().__init__(str(data.get("message", "service error")))
        self.code = str(data.get("error", "error"))
        self.http_status = status
        self.exit_code = int(data.get("exit_code", 2))
        self._data = data

    def payload(self) -> dict:
        return dict(self._data)


class ServiceClient:
    """One call surface for both deployment shapes.

    With ``server`` set, requests go over the network. Without it, the app is
    instantiated locally and requests run through its ASGI interface, so the
    CLI works with no server process while exercising the same endpoints.
    """

    def __init__(self, server: str | None = None, config: ServiceConfig | None = None):
        self._server = server.rstrip("/") if server else None
        self._app = None
        if self._server is None:
            from .app import create_app

            self._app = create_app(config or ServiceConfig())

    def _handle(self, response: httpx.Response) -> Any:
        if response.status_code >= 400:
            try:
                data = response.json()
            except ValueError:
                raise IoFailure(
                    f"service returned HTTP {response.status_code} with no JSON body"
                ) from None
            if isinstance(data, dict) and "error" in data:
                raise RemoteServiceError(response.status_code, data)
            raise IoFailure(f"service returned HTTP {response.status_code}: {data}")
        return response.json()

    async def _local_request(self, method: str, path: str, body: dict | None) -> httpx.Response:
        transport = httpx.ASGITransport(app=self._app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://paperrec.local", timeout=_TIMEOUT
        ) as client:
            return await client.request(method, path, json=body)

    def request(self, method: str, path: str, body: dict | None = None) -> Any:
        if self._server is None:
            response = asyncio.run(self._local_request(method, path, body))
        else:
            try:
                with httpx.Client(base_url=self._server, timeout=_TIMEOUT) as client:
                    response = client.request(method, path, json=body)
            except httpx.HTTPError as exc:
                raise IoFailure(f"cannot reach service at {self._server}: {exc}") from exc
        return self._handle(response)

    def get(self, path: str) -> Any:
        return self.request("GET", path)

    def post(self, path: str, body: dict) -> Any:
        return self.request("POST", path, body)
