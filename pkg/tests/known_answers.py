"""Known-answer instances shipped in docs/instances, with their expected (dim_H, dim_H')."""

import json
from pathlib import Path

INSTANCES = Path(__file__).resolve().parents[1] / "docs" / "instances"

TABLE = {
    "sigmaE_stF": (0, 1),
    "stE_stF": (1, 0),
    "sigmaE_sigmaF": (1, 0),
    "sigmaE_sigmaF_eta": (1, 0),
    "split_sigma3": (1, 0),
    "split_sigma3_eta": (1, 0),
    "cubic_st": (0, 1),
    "cubic_sigma_eta": (1, 0),
}


def path(name: str) -> str:
    return str(INSTANCES / f"{name}.json")


def load(name: str) -> dict:
    return json.loads((INSTANCES / f"{name}.json").read_text())
