#!/usr/bin/env python3
# Copyright 2026 The chartqa Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Stand-in for the platform chart tool: `fake_renderer.py template DIR`.

Supports {{ .Values.a.b }}, {{ .Release.Name }}, {{ .Chart.Name }} and
{{ .Chart.Version }}; anything else is reported the way the real tool does.
"""
import os
import re
import sys

import yaml

ACTION = re.compile(r"\{\{-?\s*(.*?)\s*-?\}\}")


def lookup(values, dotted):
    node = values
    for part in dotted.split("."):
        if not isinstance(node, dict) or part not in node:
            return None
        node = node[part]
    return node


def render(body, values, chart, tpl):
    def expand(match):
        expr = match.group(1)
        if expr == ".Release.Name":
            return "release-name"
        if expr == ".Chart.Name":
            return str(chart["name"])
        if expr == ".Chart.Version":
            return str(chart["version"])
        if expr.startswith(".Values."):
            value = lookup(values, expr[len(".Values."):])
            if value is None:
                raise RuntimeError(
                    f'template: {tpl}: executing "{tpl}" at <{expr}>: nil pointer evaluating interface')
            if isinstance(value, bool):
                return "true" if value else "false"
            return str(value)
        name = expr.split()[0]
        raise RuntimeError(f'template: {tpl}: function "{name}" not defined')

    return ACTION.sub(expand, body)


def main():
    if len(sys.argv) != 3 or sys.argv[1] != "template":
        print("usage: fake_renderer.py template DIR", file=sys.stderr)
        return 2
    root = sys.argv[2]
    with open(os.path.join(root, "Chart.yaml")) as f:
        chart = yaml.safe_load(f)
    values = {}
    if os.path.exists(os.path.join(root, "values.yaml")):
        with open(os.path.join(root, "values.yaml")) as f:
            values = yaml.safe_load(f) or {}
    out = []
    errors = []
    tdir = os.path.join(root, "templates")
    for name in sorted(os.listdir(tdir)) if os.path.isdir(tdir) else []:
        if not name.endswith((".yaml", ".yml")):
            continue
        tpl = f"{chart['name']}/templates/{name}"
        with open(os.path.join(tdir, name)) as f:
            body = f.read()
        try:
            text = render(body, values, chart, tpl)
        except RuntimeError as e:
            errors.append(f"Error: render error in \"{tpl}\": {e}")
            continue
        for doc in re.split(r"(?m)^---[ \t]*\n", text):
            if doc.strip():
                out.append(f"---\n# Source: {tpl}\n{doc}")
    if errors:
        print("\n".join(errors), file=sys.stderr)
        return 1
    sys.stdout.write("".join(out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
