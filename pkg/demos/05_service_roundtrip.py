"""
The playback service wire contract
==================================

Drives the HTTP service in-process and shows the exact request/response
shapes a client (such as the browser editor) uses: fetch a default pattern,
validate an edit, and prefetch a cycle of motion samples plus the beat
events needed for downbeat flashes.

To run the same requests against a live server:  baton serve --port 8000
"""

import json

from fastapi.testclient import TestClient

from baton.service import create_app

client = TestClient(create_app())

# 1. Liveness.
print("GET /api/v1/health ->", client.get("/api/v1/health").json())

# 2. Fetch a built-in pattern document.
doc = client.get("/api/v1/patterns/defaults/4").json()
print(f"\nGET /api/v1/patterns/defaults/4 -> {doc['name']}, "
      f"{len(doc['anchors'])} anchors")

# 3. Validate an edit that breaks the extremum convention.
broken = json.loads(json.dumps(doc))
broken["anchors"][0]["y"] = -1.0  # drag the downbeat preparation below its ictus
report = client.post("/api/v1/patterns/validate", json=broken).json()
print(f"\nPOST /api/v1/patterns/validate (bad edit) -> ok={report['ok']}")
for finding in report["findings"]:
    print(f"  {finding['severity']}: {finding['message']}")

# 4. Prefetch one cycle of samples the way the editor does.
request = {"pattern": doc, "bpm": 120.0, "beta": 0.6, "t0": 0.0, "t1": 2.0,
           "count": 2 * 4 * 64 + 1}
body = client.post("/api/v1/sample", json=request).json()
downbeats = [e for e in body["beat_events"]
             if e["kind"] == "ictus" and e["beat_index"] == 1]
print(f"\nPOST /api/v1/sample -> {len(body['samples'])} samples, "
      f"{len(body['beat_events'])} beat events, downbeat at t={downbeats[0]['time']} s")
