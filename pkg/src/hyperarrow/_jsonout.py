"""Iterative JSON encoder.

``json.dumps`` recurses once per nesting level, which fails on the deep ASTs
that step-limited evaluations can leave behind.
"""
import json


def dumps(obj) -> str:
    out = []
    stack = [obj]
    while stack:
        item = stack.pop()
        if isinstance(item, _Raw):
            out.append(item.text)
        elif isinstance(item, dict):
            stack.append(_Raw("}"))
            pairs = list(item.items())
            for i, (k, v) in enumerate(reversed(pairs)):
                stack.append(v)
                sep = "" if i == len(pairs) - 1 else ", "
                stack.append(_Raw(sep + json.dumps(str(k)) + ": "))
            stack.append(_Raw("{"))
        elif isinstance(item, (list, tuple)):
            stack.append(_Raw("]"))
            for i, v in enumerate(reversed(item)):
                stack.append(v)
                if i != len(item) - 1:
                    stack.append(_Raw(", "))
            stack.append(_Raw("["))
        else:
            out.append(json.dumps(item))
    return "".join(out)


class _Raw:
    __slots__ = ("text",)

    def __init__(self, text):
        self.text = text
