"""HTTP session service: state payloads, undo contract, error codes."""

import json
import threading
import urllib.error
import urllib.request

import pytest

from vctk.service import make_server


@pytest.fixture()
def server_port():
    server = make_server(port=0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield server.server_address[1]
    server.shutdown()


def call(port, method, path, body=None):
    data = json.dumps(body).encode() if body is not None else None
    request = urllib.request.Request(
        f"http://127.0.0.1:{port}{path}", data=data, method=method,
        headers={"Content-Type": "application/json"},
    )
    try:
        with urllib.request.urlopen(request) as response:
            return response.status, response.read().decode()
    except urllib.error.HTTPError as error:
        return error.code, error.read().decode()


def test_create_session_from_catalog(server_port):
    code, body = call(server_port, "POST", "/sessions", {"catalog": "A2:standard"})
    assert code == 201
    payload = json.loads(body)
    assert payload["diagram"]["edges"] == [{"a": 1, "b": 2, "weight": 1}]
    assert payload["matrices"]["seifert"] == [[1, 0], [-1, 1]]
    assert payload["state"]["history"] == []


def test_create_session_from_basis_json(server_port):
    basis = {"lattice": {"n": 2, "gram": [[-2, 1], [1, -2]]}, "vectors": [[1, 0], [0, 1]]}
    code, body = call(server_port, "POST", "/sessions", {"basis": basis})
    assert code == 201
    code, body = call(server_port, "POST", "/sessions", {"basis": {"lattice": {"n": 2, "gram": [[-2, 1], [0, -2]]}, "vectors": [[1, 0], [0, 1]]}})
    assert code == 422


def test_move_undo_round_trip_is_byte_identical(server_port):
    _, body = call(server_port, "POST", "/sessions", {"catalog": "A3"})
    sid = json.loads(body)["id"]
    _, before = call(server_port, "GET", f"/sessions/{sid}")
    for token in ("a1", "b3", "k2"):
        code, moved = call(server_port, "POST", f"/sessions/{sid}/moves", {"token": token})
        assert code == 200
        code, after_undo = call(server_port, "POST", f"/sessions/{sid}/undo")
        assert code == 200
        _, now = call(server_port, "GET", f"/sessions/{sid}")
        assert now == before
        assert after_undo == before


def test_replaying_history_reproduces_current_state(server_port):
    from vctk.catalog import catalog_entry

    _, body = call(server_port, "POST", "/sessions", {"catalog": "A3"})
    sid = json.loads(body)["id"]
    for token in ("a1", "a2", "k3", "b2"):
        call(server_port, "POST", f"/sessions/{sid}/moves", {"token": token})
    _, state_raw = call(server_port, "GET", f"/sessions/{sid}")
    state = json.loads(state_raw)
    replayed = catalog_entry("A3").basis.apply_word(" ".join(state["history"]))
    assert [list(v) for v in replayed.vectors] == state["vectors"]


def test_pham_edge_flip(server_port):
    _, body = call(server_port, "POST", "/sessions", {"catalog": "A2:pham"})
    sid = json.loads(body)["id"]
    assert json.loads(body)["diagram"]["edges"][0]["weight"] == -1
    _, moved = call(server_port, "POST", f"/sessions/{sid}/moves", {"token": "a1"})
    assert json.loads(moved)["state"]["diagram"]["edges"][0]["weight"] == 1


def test_error_codes(server_port):
    code, _ = call(server_port, "GET", "/sessions/doesnotexist")
    assert code == 404
    _, body = call(server_port, "POST", "/sessions", {"catalog": "A2"})
    sid = json.loads(body)["id"]
    code, _ = call(server_port, "POST", f"/sessions/{sid}/moves", {"token": "a9"})
    assert code == 422
    code, _ = call(server_port, "POST", f"/sessions/{sid}/moves", {"token": "frog"})
    assert code == 422
    code, _ = call(server_port, "POST", f"/sessions/{sid}/undo")
    assert code == 409
    code, _ = call(server_port, "POST", "/sessions", {"catalog": "A2", "basis": {}})
    assert code == 422


def test_target_matching(server_port):
    _, body = call(server_port, "POST", "/sessions", {"catalog": "A2:pham", "target": "A2:standard"})
    sid = json.loads(body)["id"]
    assert json.loads(body)["state"]["target_matched"] is False
    _, moved = call(server_port, "POST", f"/sessions/{sid}/moves", {"token": "a1"})
    assert json.loads(moved)["state"]["target_matched"] is True


def test_snapshot_persistence(tmp_path):
    server = make_server(port=0, snapshot_dir=str(tmp_path))
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    try:
        port = server.server_address[1]
        _, body = call(port, "POST", "/sessions", {"catalog": "A2"})
        sid = json.loads(body)["id"]
        call(port, "POST", f"/sessions/{sid}/moves", {"token": "k1"})
        snapshot = json.loads((tmp_path / f"{sid}.json").read_text())
        assert snapshot["history"] == ["k1"]
        assert snapshot["vectors"] == [[-1, 0], [0, 1]]
    finally:
        server.shutdown()


def test_diagram_endpoint(server_port):
    _, body = call(server_port, "POST", "/sessions", {"catalog": "A2"})
    sid = json.loads(body)["id"]
    code, body = call(server_port, "GET", f"/sessions/{sid}/diagram")
    assert code == 200
    payload = json.loads(body)
    assert payload["charpoly"] == [1, 1, 1]
    assert payload["signature"] == [0, 0, 2]
    assert payload["nodes"] == [{"id": 1, "label": "1"}, {"id": 2, "label": "2"}]
