"""
server.py — Flask JSON API
===========================
Thin HTTP front end over the same calls the CLI makes.

Routes:
  GET  /                   minimal page with a rule box and the report
  GET  /api/semirings      registered weight semirings
  POST /api/prove          {srs, preset?, limits?}  → report, metrics, certificate, dot
  POST /api/verify         {certificate}            → {ok, failures}
  POST /api/chain          {words: [[sym, …], …]}   → chain dump and cost

Errors come back as {"error": message}: InputError → 400,
EngineError → 500.  Nothing is kept between requests.
"""

import logging
from dataclasses import asdict, replace
from typing import Any, Dict

from flask import Flask, jsonify, render_template_string, request

from algebra import list_semirings
from algorithms.chain import build_chain
from algorithms.completion import LIMIT_PRESETS, Limits
from algorithms.srs import parse_srs
from certificate import from_dict, to_dict, verify
from engine import Recorder
from errors import EngineError, InputError
from graph.letter import plain
from ui import render_chain, render_dot, render_prove_report, render_stats, render_verdict

logger = logging.getLogger(__name__)

MAX_REQUEST_BYTES = 1 << 20


def _limits_from(payload: Dict[str, Any], default: Limits) -> Limits:
    preset = payload.get("preset")
    if preset is not None:
        if preset not in LIMIT_PRESETS:
            raise InputError(f"unknown preset {preset!r}; choose from {', '.join(LIMIT_PRESETS)}")
        default = LIMIT_PRESETS[preset]
    overrides = payload.get("limits") or {}
    if not isinstance(overrides, dict):
        raise InputError("limits must be an object")
    fields = {}
    for key in ("max_steps", "max_states", "max_height"):
        if key in overrides:
            value = overrides[key]
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise InputError(f"limits.{key} must be a non-negative integer")
            fields[key] = value
    return replace(default, **fields)


def _json_body() -> Dict[str, Any]:
    payload = request.get_json(silent=True)
    if not isinstance(payload, dict):
        raise InputError("request body must be a JSON object")
    return payload


def create_app(limits: Limits = LIMIT_PRESETS["default"]) -> Flask:
    app = Flask(__name__)
    app.config["MAX_CONTENT_LENGTH"] = MAX_REQUEST_BYTES
    app.config["LIMITS"] = limits

    # ------------------------------------------------------------------
    # Error mapping
    # ------------------------------------------------------------------
    @app.errorhandler(InputError)
    def _input_error(exc: InputError):
        return jsonify({"error": str(exc)}), 400

    @app.errorhandler(EngineError)
    def _engine_error(exc: EngineError):
        logger.error("engine failure: %s", exc)
        return jsonify({"error": str(exc)}), 500

    # ------------------------------------------------------------------
    # Routes
    # ------------------------------------------------------------------
    @app.route("/")
    def index():
        return render_template_string(INDEX_TEMPLATE, presets=list(LIMIT_PRESETS))

    @app.route("/api/semirings")
    def api_semirings():
        return jsonify([
            {"key": info.key, "label": info.label, "idempotent": info.ops.idempotent,
             "description": info.description}
            for info in list_semirings()
        ])

    @app.route("/api/prove", methods=["POST"])
    def api_prove():
        payload = _json_body()
        text = payload.get("srs")
        if not isinstance(text, str):
            raise InputError("field 'srs' must be a string")
        srs = parse_srs(text)
        rec = Recorder()
        rec.start(srs, limits=_limits_from(payload, app.config["LIMITS"]))
        metrics = rec.run_to_completion()
        cert = rec.certificate()
        return jsonify({
            "report":      render_prove_report(metrics) + render_stats(metrics),
            "metrics":     asdict(metrics),
            "certificate": to_dict(cert) if cert else None,
            "dot":         render_dot(cert) if cert else None,
        })

    @app.route("/api/verify", methods=["POST"])
    def api_verify():
        payload = _json_body()
        verdict = verify(from_dict(payload.get("certificate")))
        return jsonify({
            "ok":       verdict.ok,
            "failures": [{"check": f.check, "message": f.message} for f in verdict.failures],
            "report":   render_verdict(verdict, limit=None),
        })

    @app.route("/api/chain", methods=["POST"])
    def api_chain():
        payload = _json_body()
        words = payload.get("words")
        if not isinstance(words, list) or not all(
            isinstance(w, list) and all(isinstance(c, str) for c in w) for w in words
        ):
            raise InputError("field 'words' must be a list of symbol lists")
        if not words:
            raise InputError("at least one word is required")
        chain = build_chain([tuple(plain(c) for c in w) for w in words])
        return jsonify({"nodes": len(chain.nodes), "cost": chain.cost, "dump": render_chain(chain)})

    return app


# ---------------------------------------------------------------------------
# HTML Template
# ---------------------------------------------------------------------------
INDEX_TEMPLATE = """
<!DOCTYPE html>
<html lang="en">
<head>
  <meta charset="UTF-8">
  <title>Matchbound Prover</title>
  <style>
    body { font-family: 'DM Sans', sans-serif; background: #010409; color: #e6edf3; margin: 32px; }
    textarea, select, button { background: #161b22; color: #e6edf3; border: 1px solid #30363d;
                               border-radius: 6px; padding: 8px; font-family: 'JetBrains Mono', monospace; }
    textarea { width: 480px; height: 140px; }
    pre { background: #161b22; border: 1px solid #30363d; border-radius: 12px; padding: 16px; }
  </style>
</head>
<body>
  <h2>Matchbound Prover</h2>
  <textarea id="srs">a a -> a b a</textarea><br><br>
  <select id="preset">
    {% for p in presets %}<option value="{{ p }}" {% if p == "default" %}selected{% endif %}>{{ p }}</option>{% endfor %}
  </select>
  <button id="btn-prove">Prove</button>
  <pre id="report"></pre>
  <script>
    document.getElementById('btn-prove').addEventListener('click', async () => {
      const res = await fetch('/api/prove', {
        method: 'POST',
        headers: {'Content-Type': 'application/json'},
        body: JSON.stringify({srs: document.getElementById('srs').value,
                              preset: document.getElementById('preset').value}),
      });
      const data = await res.json();
      document.getElementById('report').textContent = data.error || data.report;
    });
  </script>
</body>
</html>
"""
