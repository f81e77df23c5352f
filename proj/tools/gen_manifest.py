#!/usr/bin/env python3
"""Rebuild fixtures/corpus/manifest.json from the `// expect: <rule>` markers."""
import json
import os
import re
import sys

root = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "fixtures", "corpus")
fixtures = []
for name in sorted(os.listdir(root)):
    path = os.path.join(root, name)
    if not os.path.isdir(path):
        continue
    findings = []
    with open(os.path.join(path, "index.js")) as f:
        for line_no, line in enumerate(f, 1):
            m = re.search(r"// expect: ([\w-]+)", line)
            if m:
                findings.append({"rule_id": m.group(1), "file": "index.js", "line": line_no})
    fixtures.append({"name": name, "kind": "vulnerable" if findings else "clean", "findings": findings})
with open(os.path.join(root, "manifest.json"), "w") as f:
    json.dump({"fixtures": fixtures}, f, indent=2)
    f.write("\n")
print(len(fixtures), "fixtures")
