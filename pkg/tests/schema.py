"""JSON schema for analysis reports, used to validate CLI and library output."""

_count = {"type": "integer", "minimum": 0}
_count_or_null = {"type": ["integer", "null"], "minimum": 0}
_rational = {"type": "string", "pattern": r"^-?\d+/\d+$"}
_flag = {"anyOf": [{"type": "boolean"}, {"enum": ["not applicable", "unavailable"]}]}
_cycle = {"type": "array", "items": _count}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["n", "m", "transitive", "group_order", "connectivity", "circumference",
                 "longest_cycle_count", "k_min_intersection", "k_degenerate", "hitting_set",
                 "hitting_set_size", "bounds", "satisfied", "ratio_t_over_n",
                 "lemma2_checks", "caps_hit"],
    "properties": {
        "n": _count,
        "m": _count,
        "transitive": {"type": ["boolean", "null"]},
        "group_order": _count_or_null,
        "connectivity": _count_or_null,
        "circumference": _count_or_null,
        "witness_cycle": {"anyOf": [_cycle, {"type": "null"}]},
        "longest_cycle_count": _count_or_null,
        "k_min_intersection": _count_or_null,
        "k_degenerate": {"type": "boolean"},
        "k_pair": {"anyOf": [{"type": "array", "items": _cycle, "minItems": 2,
                              "maxItems": 2}, {"type": "null"}]},
        "hitting_set": {"anyOf": [{"type": "null"}, {
            "type": "object",
            "required": ["B", "B0", "k", "size", "size_ok", "hits_all"],
            "properties": {"B": _cycle, "B0": _cycle, "k": _count, "size": _count,
                           "size_ok": {"type": "boolean"}, "hits_all": {"type": "boolean"}},
        }]},
        "hitting_set_size": _count_or_null,
        "bounds": {
            "type": "object",
            "required": ["babai_sq3n", "sqrt_kn", "n_over_k2_plus_k"],
            "properties": {
                "babai_sq3n": {"type": "object", "required": ["square", "display"],
                               "properties": {"square": _count}},
                "sqrt_kn": {"anyOf": [{"type": "null"}, {
                    "type": "object", "required": ["square", "display"],
                    "properties": {"square": _count}}]},
                "n_over_k2_plus_k": {"anyOf": [{"type": "null"}, {
                    "type": "object", "required": ["value", "display"],
                    "properties": {"value": _rational}}]},
            },
        },
        "satisfied": {
            "type": "object",
            "required": ["babai", "sqrt_kn", "n_over_k2_plus_k", "combined"],
            "properties": {"babai": _flag, "babai_equality": _flag, "sqrt_kn": _flag,
                           "n_over_k2_plus_k": _flag, "combined": _flag,
                           "binding": {"enum": ["sqrt_kn", "n_over_k2_plus_k", "equal", None]}},
        },
        "ratio_t_over_n": {"anyOf": [_rational, {"type": "null"}]},
        "lemma2_checks": {"type": "array", "items": {
            "type": "object", "required": ["name", "k_min", "lhs_BC", "rhs_kn", "holds"]}},
        "caps_hit": {"type": "array", "items": {"type": "string"}},
        "failures": {"type": "array", "items": {"type": "string"}},
    },
}
