"""JSON schemas for every machine-readable CLI output."""

_GRAPH = {
    "type": "object",
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "edges": {
            "type": "array",
            "items": {
                "type": "array",
                "items": [
                    {"type": "integer", "minimum": 0},
                    {"type": "integer", "minimum": 0},
                    {"enum": [1, -1]},
                ],
                "minItems": 3,
                "maxItems": 3,
            },
        },
    },
    "required": ["n", "edges"],
    "additionalProperties": False,
}

_VERTEX_LIST = {"type": "array", "items": {"type": "integer", "minimum": 0}}

GRAPH_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "signed graph",
    **_GRAPH,
}

COORDINATES_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "product coordinate system",
    "type": "object",
    "properties": {
        "factors": {"type": "array", "items": _GRAPH},
        "coords": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        },
    },
    "required": ["factors", "coords"],
    "additionalProperties": False,
}

DECOMPOSITION_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "prime s-decomposition",
    "type": "object",
    "properties": {
        "factors": {"type": "array", "items": _GRAPH},
        "coords": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        },
        "switch_set": _VERTEX_LIST,
        "factor_of_edge": {
            "type": "array",
            "items": {
                "type": "array",
                "items": [
                    {"type": "integer", "minimum": 0},
                    {"type": "integer", "minimum": 0},
                    {"type": "integer", "minimum": 0},
                ],
                "minItems": 3,
                "maxItems": 3,
            },
        },
    },
    "required": ["factors", "coords", "switch_set", "factor_of_edge"],
    "additionalProperties": False,
}

CERTIFICATE_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "chromatic number certificate",
    "type": "object",
    "properties": {
        "k": {"type": "integer", "minimum": 1},
        "target": _GRAPH,
        "map": _VERTEX_LIST,
        "switch_set": _VERTEX_LIST,
        "lower_bound_evidence": {"type": "object"},
    },
    "required": ["k", "target", "map", "switch_set", "lower_bound_evidence"],
    "additionalProperties": False,
}

SWITCH_SET_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "switching equivalence answer",
    "type": "object",
    "properties": {
        "equivalent": {"type": "boolean"},
        "switch_set": _VERTEX_LIST,
    },
    "required": ["equivalent"],
    "additionalProperties": False,
}

BALANCE_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "balance answer",
    "type": "object",
    "properties": {
        "balanced": {"type": "boolean"},
        "switch_set": _VERTEX_LIST,
        "witness_walk": _VERTEX_LIST,
    },
    "required": ["balanced"],
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "verification report",
    "type": "object",
    "properties": {
        "report": {"type": "string"},
        "summary": {
            "type": "object",
            "properties": {
                "total": {"type": "integer", "minimum": 0},
                "passed": {"type": "integer", "minimum": 0},
                "failed": {"type": "integer", "minimum": 0},
            },
            "required": ["total", "passed", "failed"],
            "additionalProperties": False,
        },
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "claim": {"type": "string"},
                    "parameters": {"type": "object"},
                    "expected": {},
                    "computed": {},
                    "pass": {"type": "boolean"},
                    "elapsed": {"type": "number"},
                },
                "required": ["claim", "parameters", "expected", "computed", "pass"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["report", "summary", "entries"],
    "additionalProperties": False,
}
