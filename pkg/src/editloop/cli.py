"""Terminal client and batch tool.

``run`` starts an interactive prompt loop against the in-process engine
(or against a running service with --remote). ``replay`` re-executes a
recorded transcript and verifies every digest. ``serve`` starts the HTTP
service. Exit codes: 0 success, 1 usage or missing fixture, 2 replay
mismatch, 3 backend failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from editloop.config import BackendConfig, EngineConfig
from editloop.errors import (
    BackendRefused,
    BackendUnavailable,
    EngineError,
    MissingFixture,
)
from editloop.backends.mock import ScriptedMock
from editloop.backends.recording import RecordingBackend
from editloop.backends.remote import RemoteBackend
from editloop.imaging.fileio import load_image, save_image_png
from editloop.replay import replay_transcript
from editloop.segmentation import from_fixture
from editloop.session import ChatEntry, EditSession, start_session
from editloop.transcript import build_transcript, load_transcript, save_transcript

HEADING_MARKS = {1: "# ", 2: "## ", None: ""}


def build_backend(config: EngineConfig, mock_script: str | None):
    if mock_script:
        return ScriptedMock.from_file(mock_script)
    backend_config = config.backend
    if backend_config.type == "mock":
        if not backend_config.script_path:
            raise MissingFixture("mock backend needs a script (--mock-script or config)")
        return ScriptedMock.from_file(backend_config.script_path)
    if backend_config.type == "remote":
        return RemoteBackend(backend_config)
    raise ValueError(f"unknown backend type: {backend_config.type}")


def load_config(path: str | None) -> EngineConfig:
    if path:
        return EngineConfig.from_file(path)
    return EngineConfig(routing="rules")


def print_chat_entries(entries, out=sys.stdout) -> None:
    for entry in entries:
        if isinstance(entry, ChatEntry):
            level, text = entry.heading_level, entry.text
        else:
            level, text = entry.get("heading_level"), entry.get("text", "")
        print(f"{HEADING_MARKS.get(level, '')}{text}", file=out)


class LocalClient:
    """Drives an in-process session (library mode)."""

    def __init__(self, image_path: str, labels_path: str | None, config: EngineConfig,
                 mock_script: str | None):
        image = load_image(image_path)
        label_map = from_fixture(labels_path, image) if labels_path else None
        backend = RecordingBackend(build_backend(config, mock_script))
        self.session: EditSession = start_session(image, label_map, backend, config=config)

    def initial_entries(self):
        return self.session.chat[:2]

    def prompt(self, text: str):
        return self.session.handle_prompt(text).chat_added

    def undo(self):
        self.session.undo()
        return self.session.chat[-1:]

    def redo(self):
        self.session.redo()
        return self.session.chat[-1:]

    def save_image(self, path: str):
        save_image_png(self.session.current_image, path)

    def save_transcript(self, path: str):
        save_transcript(build_transcript(self.session), path)


class RemoteClient:
    """Drives a session over the HTTP API."""

    def __init__(self, base_url: str, image_path: str, labels_path: str | None):
        import httpx

        self._client = httpx.Client(base_url=base_url, timeout=120.0)
        files = {"image": (Path(image_path).name, Path(image_path).read_bytes(), "image/png")}
        if labels_path:
            files["label_map"] = (
                Path(labels_path).name, Path(labels_path).read_bytes(), "image/png"
            )
        response = self._client.post("/sessions", files=files)
        self._raise_for_problem(response)
        data = response.json()
        self.session_id = data["session_id"]
        self._initial = [
            {"heading_level": None,
             "text": f"Initial General Description: {data['general_description']}"},
            {"heading_level": None,
             "text": "Initial Object Descriptions:\n" + "\n".join(
                 f"Object {o['index']}: {o['description']}" for o in data["objects"]
             )},
        ]

    @staticmethod
    def _raise_for_problem(response) -> None:
        if response.status_code < 400:
            return
        try:
            problem = response.json()
            message = f"{problem.get('kind')}: {problem.get('message')}"
            if problem.get("candidates"):
                message += "".join(
                    f"\n  candidate {c['index']}: {c['description']}"
                    for c in problem["candidates"]
                )
        except (ValueError, KeyError):
            message = f"HTTP {response.status_code}"
        if response.status_code >= 500:
            raise BackendUnavailable(message)
        raise EngineError(message)

    def initial_entries(self):
        return self._initial

    def prompt(self, text: str):
        response = self._client.post(
            f"/sessions/{self.session_id}/prompts", json={"text": text}
        )
        self._raise_for_problem(response)
        return response.json()["chat_entries"]

    def undo(self):
        response = self._client.post(f"/sessions/{self.session_id}/undo")
        self._raise_for_problem(response)
        return [{"heading_level": None, "text": "[Edit undone]"}]

    def redo(self):
        response = self._client.post(f"/sessions/{self.session_id}/redo")
        self._raise_for_problem(response)
        return [{"heading_level": None, "text": "[Edit redone]"}]

    def save_image(self, path: str):
        response = self._client.get(f"/sessions/{self.session_id}/images/current")
        self._raise_for_problem(response)
        Path(path).write_bytes(response.content)

    def save_transcript(self, path: str):
        response = self._client.get(f"/sessions/{self.session_id}/transcript")
        self._raise_for_problem(response)
        Path(path).write_text(
            json.dumps(response.json(), indent=2, ensure_ascii=False) + "\n",
            encoding="utf-8",
        )


def cmd_run(args) -> int:
    config = load_config(args.backend_config)
    try:
        if args.remote:
            client = RemoteClient(args.remote, args.image, args.labels)
        else:
            client = LocalClient(args.image, args.labels, config, args.mock_script)
    except (BackendUnavailable, BackendRefused) as exc:
        print(f"backend failure: {exc.message}", file=sys.stderr)
        return 3
    except (EngineError, OSError) as exc:
        print(f"startup failure: {exc}", file=sys.stderr)
        return 1

    print_chat_entries(client.initial_entries())
    while True:
        try:
            line = input("> ").strip()
        except EOFError:
            break
        if not line:
            continue
        if line == ":quit":
            break
        try:
            if line == ":undo":
                print_chat_entries(client.undo())
            elif line == ":redo":
                print_chat_entries(client.redo())
            elif line.startswith(":save "):
                target = line.split(None, 1)[1]
                client.save_image(target)
                print(f"saved {target}")
            elif line.startswith(":transcript "):
                target = line.split(None, 1)[1]
                client.save_transcript(target)
                print(f"saved transcript {target}")
            else:
                print_chat_entries(client.prompt(line))
        except EngineError as exc:
            print(f"error ({exc.kind}): {exc.message}")
    return 0


def cmd_replay(args) -> int:
    for label, path in (
        ("transcript", args.transcript),
        ("image", args.image),
        ("labels", args.labels),
        ("mock script", args.mock_script),
    ):
        if not path or not Path(path).exists():
            print(f"missing fixture: {label} ({path})", file=sys.stderr)
            return 1

    transcript = load_transcript(args.transcript)
    image = load_image(args.image)
    label_map = from_fixture(args.labels, image)
    backend = RecordingBackend(ScriptedMock.from_file(args.mock_script))
    try:
        report, _session = replay_transcript(transcript, image, label_map, backend)
    except (BackendUnavailable, BackendRefused) as exc:
        print(f"backend failure: {exc.message}", file=sys.stderr)
        return 3
    for line in report.summary_lines():
        print(line)
    print("replay: PASS" if report.passed else "replay: FAIL")
    return 0 if report.passed else 2


def cmd_serve(args) -> int:
    import uvicorn

    from editloop.service.app import create_app
    from editloop.service.store import SessionStore

    config = load_config(args.backend_config)
    if args.mock_script:
        config = config.with_overrides(
            backend=BackendConfig(type="mock", script_path=args.mock_script)
        )
    overrides = {}
    if args.brightness_step is not None:
        overrides["brightness_step"] = args.brightness_step
    if args.blur_sigma_min is not None:
        overrides["blur_sigma_min"] = args.blur_sigma_min
    if args.blur_sigma_divisor is not None:
        overrides["blur_sigma_divisor"] = args.blur_sigma_divisor
    if overrides:
        config = config.with_overrides(**overrides)

    backend = build_backend(config, args.mock_script)
    app = create_app(SessionStore(args.store), backend, config)
    host, _, port = args.listen.partition(":")
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8000))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="editloop",
        description="Object-level image editing with verification feedback",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="interactive editing loop")
    run.add_argument("--image", required=True)
    run.add_argument("--labels", help="label-map PNG (16-bit, pixel value = object index)")
    run.add_argument("--mock-script", help="scripted mock backend responses")
    run.add_argument("--backend-config", help="engine config JSON")
    run.add_argument("--store", help="(reserved) session store directory")
    run.add_argument("--remote", help="base URL of a running service")
    run.set_defaults(func=cmd_run)

    replay = sub.add_parser("replay", help="verify a recorded transcript")
    replay.add_argument("--transcript", required=True)
    replay.add_argument("--image", required=True)
    replay.add_argument("--labels", required=True)
    replay.add_argument("--mock-script", required=True)
    replay.set_defaults(func=cmd_replay)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--listen", default="127.0.0.1:8000")
    serve.add_argument("--store", required=True)
    serve.add_argument("--backend-config")
    serve.add_argument("--mock-script")
    serve.add_argument("--brightness-step", type=int)
    serve.add_argument("--blur-sigma-min", type=float)
    serve.add_argument("--blur-sigma-divisor", type=float)
    serve.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
