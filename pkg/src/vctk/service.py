"""JSON-over-HTTP session service for interactive diagram reduction.

Sessions are in-memory: a current basis plus an undo stack of (token,
previous basis) pairs, optionally snapshotted to one JSON file per session.
Replaying the recorded history from the initial basis always reproduces the
current basis, and every payload is canonical JSON with exact integers
(decimal strings beyond 64 bits), so client state can be compared byte for
byte.

Routes:
    POST /sessions                {"catalog": name[, "n": int]} or
                                  {"basis": {...}}[, "target": name or {...}]
    GET  /sessions/{id}           full state
    POST /sessions/{id}/moves     {"token": "a1"}   -> new state + diff
    POST /sessions/{id}/undo      pops one move      -> prior state
    GET  /sessions/{id}/diagram   nodes/edges/charpoly/signature

Errors: 404 unknown session, 409 undo on empty history, 422 invalid move.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from .analysis import char_poly
from .catalog import catalog_entry
from .errors import InputError
from .jsonio import canonical_dumps, loads
from .moves import DistinguishedBasis, parse_word
from .seifert import monodromy_from_seifert, seifert_from_intersection


@dataclass
class Session:
    id: str
    initial: DistinguishedBasis
    current: DistinguishedBasis
    history: list[tuple[str, DistinguishedBasis]] = field(default_factory=list)
    target: DistinguishedBasis | None = None
    lock: threading.Lock = field(default_factory=threading.Lock)

    def diagram_payload(self) -> dict:
        basis = self.current
        n = basis.lattice.n
        gram = basis.gram()
        mu = basis.mu
        seifert = seifert_from_intersection(gram, n)
        monodromy = monodromy_from_seifert(seifert)
        signature = list(basis.lattice.signature()) if n % 2 == 0 else None
        return {
            "nodes": [{"id": v, "label": str(v)} for v in range(1, mu + 1)],
            "edges": [
                {"a": i + 1, "b": j + 1, "weight": gram[i][j]}
                for i in range(mu)
                for j in range(i + 1, mu)
                if gram[i][j] != 0
            ],
            "charpoly": list(char_poly(monodromy).coeffs),
            "signature": signature,
        }

    def state_payload(self) -> dict:
        basis = self.current
        n = basis.lattice.n
        gram = basis.gram()
        seifert = seifert_from_intersection(gram, n)
        payload = {
            "id": self.id,
            "n": n,
            "mu": basis.mu,
            "lattice": basis.lattice.to_json_dict(),
            "vectors": [list(v) for v in basis.vectors],
            "history": [token for token, _ in self.history],
            "matrices": {
                "intersection": [list(r) for r in gram],
                "seifert": [list(r) for r in seifert.entries],
                "monodromy": [list(r) for r in monodromy_from_seifert(seifert)],
            },
            "diagram": self.diagram_payload(),
            "target_matched": None,
        }
        if self.target is not None:
            payload["target"] = {
                "gram": [list(r) for r in self.target.gram()],
            }
            payload["target_matched"] = self.target.gram() == gram
        return payload


class SessionStore:
    def __init__(self, snapshot_dir: str | None = None):
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        self._snapshot_dir = Path(snapshot_dir) if snapshot_dir else None
        if self._snapshot_dir:
            self._snapshot_dir.mkdir(parents=True, exist_ok=True)

    def create(self, body: dict) -> Session:
        if not isinstance(body, dict):
            raise InputError("expected a JSON object")
        unknown = set(body) - {"catalog", "basis", "n", "target"}
        if unknown:
            raise InputError(f"unknown fields: {sorted(unknown)}")
        if ("catalog" in body) == ("basis" in body):
            raise InputError('provide exactly one of "catalog" or "basis"')
        if "catalog" in body:
            n = body.get("n", 2)
            if not isinstance(n, int) or isinstance(n, bool):
                raise InputError('"n" must be an integer')
            basis = catalog_entry(body["catalog"], n=n).basis
        else:
            basis = DistinguishedBasis.from_json_dict(body["basis"])
        target = None
        if "target" in body:
            spec = body["target"]
            if isinstance(spec, str):
                target = catalog_entry(spec, n=basis.lattice.n).basis
            else:
                target = DistinguishedBasis.from_json_dict(spec)
            if target.mu != basis.mu:
                raise InputError("target rank differs from the session rank")
        session = Session(id=uuid.uuid4().hex, initial=basis, current=basis, target=target)
        with self._lock:
            self._sessions[session.id] = session
        self._snapshot(session)
        return session

    def get(self, session_id: str) -> Session | None:
        with self._lock:
            return self._sessions.get(session_id)

    def _snapshot(self, session: Session) -> None:
        if not self._snapshot_dir:
            return
        path = self._snapshot_dir / f"{session.id}.json"
        path.write_text(canonical_dumps(session.state_payload()) + "\n")

    def apply_move(self, session: Session, token: str) -> dict:
        with session.lock:
            word = parse_word(token)
            if len(word) != 1:
                raise InputError("one move token per request")
            before = session.current
            after = before.apply_move(word[0])
            session.history.append((word[0].token(), before))
            session.current = after
            diff = {
                "vectors_changed": [
                    i + 1 for i, (u, v) in enumerate(zip(before.vectors, after.vectors)) if u != v
                ],
                "gram_changed": before.gram() != after.gram(),
            }
            state = session.state_payload()
        self._snapshot(session)
        return {"state": state, "diff": diff}

    def undo(self, session: Session) -> dict:
        with session.lock:
            if not session.history:
                raise _EmptyHistory()
            _, previous = session.history.pop()
            session.current = previous
            state = session.state_payload()
        self._snapshot(session)
        return state


class _EmptyHistory(Exception):
    pass


def make_handler(store: SessionStore):
    class Handler(BaseHTTPRequestHandler):
        server_version = "vctk"
        protocol_version = "HTTP/1.1"

        def log_message(self, fmt, *args):  # quiet by default
            pass

        def _send(self, code: int, payload: dict) -> None:
            body = (canonical_dumps(payload) + "\n").encode()
            self.send_response(code)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(body)

        def _read_body(self) -> dict:
            length = int(self.headers.get("Content-Length", "0"))
            raw = self.rfile.read(length).decode() if length else "{}"
            data = loads(raw)
            if not isinstance(data, dict):
                raise InputError("expected a JSON object body")
            return data

        def _route(self):
            parts = [p for p in self.path.split("?")[0].split("/") if p]
            return parts

        def do_POST(self):
            parts = self._route()
            try:
                if parts == ["sessions"]:
                    session = store.create(self._read_body())
                    state = session.state_payload()
                    self._send(201, {
                        "id": session.id,
                        "diagram": state["diagram"],
                        "matrices": state["matrices"],
                        "state": state,
                    })
                    return
                if len(parts) == 3 and parts[0] == "sessions" and parts[2] == "moves":
                    session = store.get(parts[1])
                    if session is None:
                        self._send(404, {"error": "unknown session"})
                        return
                    body = self._read_body()
                    token = body.get("token")
                    if not isinstance(token, str):
                        raise InputError('body must be {"token": "<move>"}')
                    try:
                        self._send(200, store.apply_move(session, token))
                    except InputError as exc:
                        self._send(422, {"error": str(exc)})
                    return
                if len(parts) == 3 and parts[0] == "sessions" and parts[2] == "undo":
                    session = store.get(parts[1])
                    if session is None:
                        self._send(404, {"error": "unknown session"})
                        return
                    try:
                        self._send(200, store.undo(session))
                    except _EmptyHistory:
                        self._send(409, {"error": "history is empty"})
                    return
                self._send(404, {"error": "no such route"})
            except InputError as exc:
                self._send(422, {"error": str(exc)})

        def do_GET(self):
            parts = self._route()
            if len(parts) >= 2 and parts[0] == "sessions":
                session = store.get(parts[1])
                if session is None:
                    self._send(404, {"error": "unknown session"})
                    return
                if len(parts) == 2:
                    with session.lock:
                        self._send(200, session.state_payload())
                    return
                if len(parts) == 3 and parts[2] == "diagram":
                    with session.lock:
                        self._send(200, session.diagram_payload())
                    return
            self._send(404, {"error": "no such route"})

    return Handler


def make_server(host: str = "127.0.0.1", port: int = 0,
                snapshot_dir: str | None = None) -> ThreadingHTTPServer:
    store = SessionStore(snapshot_dir=snapshot_dir)
    return ThreadingHTTPServer((host, port), make_handler(store))


def serve_forever(host: str, port: int, snapshot_dir: str | None = None) -> None:
    server = make_server(host=host, port=port, snapshot_dir=snapshot_dir)
    print(f"vctk service on http://{host}:{server.server_address[1]}/")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
