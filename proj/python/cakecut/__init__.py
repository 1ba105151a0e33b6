"""Python bindings for the cakecut library."""

import json

from . import _cakecut
from ._cakecut import ScenarioError, selftest

__all__ = ["ScenarioError", "simulate", "run", "attack", "verify", "verify_file", "selftest", "protocols"]


def _text(scenario):
    return scenario if isinstance(scenario, str) else json.dumps(scenario)


def simulate(scenario):
    """Runs every protocol listed in the scenario; returns the report dict."""
    return json.loads(_cakecut.simulate_json(_text(scenario)))


def run(scenario, protocol):
    """Runs one protocol. Crypto runs carry the transcript under "transcript_text"."""
    return json.loads(_cakecut.run_json(_text(scenario), protocol))


def attack(scenario, attacker):
    return json.loads(_cakecut.attack_json(_text(scenario), attacker))


def _decoded(result):
    if result["allocation"] is not None:
        result["allocation"] = json.loads(result["allocation"])
    return result


def verify(transcript_text):
    return _decoded(_cakecut.verify_text(transcript_text))


def verify_file(path):
    return _decoded(_cakecut.verify_file(str(path)))


def protocols():
    return list(_cakecut.protocols())
