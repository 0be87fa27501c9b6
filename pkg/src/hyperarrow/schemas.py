"""JSON Schemas for everything the CLI prints with ``--json``.

Naturals inside terms and ordinals are decimal strings so that values of any
size survive a round trip through JSON tooling that uses doubles.
"""

NAT = {"type": "string", "pattern": "^[0-9]+$"}

ORDINAL = {
    "$id": "ordinal",
    "type": "array",
    "items": {
        "type": "array",
        "prefixItems": [{"$ref": "ordinal"}, {"type": "string", "pattern": "^[1-9][0-9]*$"}],
        "minItems": 2,
        "maxItems": 2,
    },
}


def _node(kind, **fields):
    return {
        "type": "object",
        "properties": {"kind": {"const": kind}, **fields},
        "required": ["kind", *fields],
        "additionalProperties": False,
    }


TERM = {
    "$id": "term",
    "oneOf": [
        _node("lit", value=NAT),
        _node("arrow", base={"$ref": "term"}, arrows={"$ref": "term"}, height={"$ref": "term"}),
        _node("fgh", index={"$ref": "ordinal"}, arg={"$ref": "term"}),
        _node("iter", index={"$ref": "ordinal"}, count=NAT, arg={"$ref": "term"}),
        _node("aur", index=NAT),
        _node("aurord", index={"$ref": "ordinal"}),
    ],
}

RELATIONS = ["Less", "LessEqual", "Equal", "GreaterEqual", "Greater"]

CERTIFICATE = {
    "$id": "certificate",
    "type": "object",
    "properties": {
        "version": {"const": "cert_v1"},
        "conclusion": {
            "type": "object",
            "properties": {
                "lhs": {"$ref": "term"},
                "rhs": {"$ref": "term"},
                "relation": {"enum": RELATIONS},
            },
            "required": ["lhs", "rhs", "relation"],
        },
        "steps": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "rule_id": {"type": "string"},
                    "lhs": {"$ref": "term"},
                    "rhs": {"$ref": "term"},
                    "relation": {"enum": RELATIONS},
                    "premises": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "bindings": {"type": "object", "additionalProperties": {"type": "integer"}},
                },
                "required": ["rule_id", "lhs", "rhs", "relation", "premises", "bindings"],
            },
        },
    },
    "required": ["version", "conclusion", "steps"],
}

TRACE = {
    "type": "object",
    "properties": {
        "steps": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "index": {"type": "integer", "minimum": 1},
                    "rule": {"type": "string"},
                    "term": {"$ref": "term"},
                },
                "required": ["index", "rule", "term"],
            },
        }
    },
    "required": ["steps"],
}

PARSE = {
    "type": "object",
    "properties": {
        "text": {"type": "string"},
        "term": {"$ref": "term"},
        "depth": {"type": "integer"},
        "node_count": {"type": "integer"},
    },
    "required": ["text", "term", "depth", "node_count"],
}

EVAL = {
    "oneOf": [
        {
            "type": "object",
            "properties": {
                "result": {"const": "exact"},
                "steps_used": {"type": "integer"},
                "digits": {"type": "integer"},
                "value": {"type": "string"},
                "leading": {"type": "string"},
                "trailing": {"type": "string"},
            },
            "required": ["result", "steps_used", "digits"],
        },
        {
            "type": "object",
            "properties": {
                "result": {"const": "overflow"},
                "reason": {"enum": ["StepLimit", "MagnitudeLimit", "SymbolicArrowCount", "SymbolicLimit"]},
                "steps_used": {"type": "integer"},
                "residual": {"$ref": "term"},
            },
            "required": ["result", "reason", "steps_used", "residual"],
        },
    ]
}

COMPARE = {
    "type": "object",
    "properties": {
        "relation": {"enum": ["Less", "Equal", "Greater", "Unknown"]},
        "certificate": {"oneOf": [{"type": "null"}, {"$ref": "certificate"}]},
    },
    "required": ["relation", "certificate"],
}

CHECK = {
    "type": "object",
    "properties": {
        "valid": {"type": "boolean"},
        "failed_step": {"type": ["integer", "null"]},
        "reason": {"type": "string"},
    },
    "required": ["valid", "failed_step", "reason"],
}

HIER = {
    "type": "object",
    "properties": {"text": {"type": "string"}, "term": {"$ref": "term"}},
    "required": ["text", "term"],
}

# documents other schemas refer to by $id
SHARED = (ORDINAL, TERM, CERTIFICATE)

COMMAND_SCHEMAS = {
    "parse": PARSE,
    "eval": EVAL,
    "trace": TRACE,
    "compare": COMPARE,
    "cert lemma1": CERTIFICATE,
    "cert check": CHECK,
    "hier": HIER,
}
