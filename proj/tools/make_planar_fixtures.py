#!/usr/bin/env python3
# Copyright 2026 The hamconn Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Stand-in for plantri output at small orders.

Reads `hamconn enum --n N --connectivity 3` on stdin and writes the planar
graphs (and the cubic planar ones) as graph6, using networkx for planarity
and connectivity so the result does not depend on hamconn's own checks.

    hamconn enum --n 8 --connectivity 3 | \
        python3 tools/make_planar_fixtures.py tests/data
"""

import sys
from pathlib import Path

import networkx as nx


def main() -> int:
    out_dir = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
    planar, cubic = [], []
    n = 0
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        g = nx.from_graph6_bytes(line.encode())
        n = g.number_of_nodes()
        if nx.node_connectivity(g) < 3 or not nx.check_planarity(g)[0]:
            continue
        planar.append(line)
        if all(d == 3 for _, d in g.degree()):
            cubic.append(line)
    (out_dir / f"planar3c_n{n}.g6").write_text("".join(s + "\n" for s in planar))
    (out_dir / f"planar3c_cubic_n{n}.g6").write_text("".join(s + "\n" for s in cubic))
    print(f"planar 3-connected: {len(planar)}, cubic: {len(cubic)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
