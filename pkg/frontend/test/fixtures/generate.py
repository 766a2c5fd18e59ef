"""Regenerate flow.json by recording a real service session.

Run from this directory with the Python package installed:

    python3 generate.py

The fixture drives the mocked-fetch component tests, so its payloads
must be byte-true service output; never edit flow.json by hand.
"""

import json
from pathlib import Path
from tempfile import TemporaryDirectory

from fastapi.testclient import TestClient

from phonoquery.oracles import atr_judge
from phonoquery.phonology import parse_word
from phonoquery.service import create_app

N_STEPS = 8
CREATE_REQUEST = {
    "policy": "eig",
    "hyperparams": {
        "log_log_odds_alpha": 1.0,
        "theta_prior": 0.025,
        "steps": "to_convergence",
    },
    "seed": 11,
}


def main() -> None:
    with TemporaryDirectory() as tmp:
        client = TestClient(create_app(sessions_dir=tmp))
        created = client.post("/sessions", json=CREATE_REQUEST)
        created.raise_for_status()
        session_id = created.json()["id"]

        initial = client.get(f"/sessions/{session_id}/state")
        initial.raise_for_status()

        steps = []
        for _ in range(N_STEPS):
            query = client.get(f"/sessions/{session_id}/query")
            query.raise_for_status()
            accept = bool(atr_judge(parse_word(query.json()["word"])))
            summary = client.post(
                f"/sessions/{session_id}/judgment", json={"accept": accept}
            )
            summary.raise_for_status()
            steps.append({
                "query": query.json(),
                "accept": accept,
                "summary": summary.json(),
            })

        export = client.get(f"/sessions/{session_id}/export")
        export.raise_for_status()
        disposition = export.headers["content-disposition"]
        filename = disposition.split('filename="')[1].rstrip('"')

    fixture = {
        "create": {"request": CREATE_REQUEST, "response": {"id": session_id}},
        "initial_state": initial.json(),
        "steps": steps,
        "export": {"filename": filename, "text": export.text},
    }
    out = Path(__file__).parent / "flow.json"
    out.write_text(json.dumps(fixture, indent=2, ensure_ascii=False) + "\n")
    print(f"wrote {out} ({N_STEPS} steps, session {session_id})")


if __name__ == "__main__":
    main()
