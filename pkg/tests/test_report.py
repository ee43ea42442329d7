from hypothesis import given
from hypothesis import strategies as st

from derivant.report import FIXED_KEYS, Record, format_record, format_records, json_like_all, parse_record


def test_fixed_keys_first_and_dashes():
    line = format_record(Record("verdict", {"extra": 1, "status": "Integrable", "order": 8}))
    keys = [kv.split("=", 1)[0] for kv in line.split()]
    assert keys == list(FIXED_KEYS) + ["extra"]
    assert "witness_count=-" in line and "kind=verdict" in line


def test_lists_and_quoting():
    line = format_record(Record("check", {"trace": ["socle", "direct-search"], "note": 'a "b" c'}))
    parsed = parse_record(line)
    assert parsed["trace"] == "socle+direct-search"
    assert parsed["note"] == 'a "b" c'


def test_children_are_flattened():
    rec = Record("verdict", {"status": "Integrable"}, [Record("witness", {"order": 8})])
    text = format_records([rec])
    assert text.count("\n") == 2 and text.splitlines()[1].startswith("kind=witness")
    assert format_records([]) == ""


def test_json_like_nests_children():
    rec = Record("verdict", {"status": "ok", "exhaustive": True}, [Record("witness", {"order": 8})])
    text = json_like_all([rec])
    assert text.startswith("[") and "children: [" in text
    assert "exhaustive: true" in text and "order: 8" in text


_text = st.text(alphabet=st.characters(blacklist_categories=("Cs", "Cc")), max_size=30)


@given(st.dictionaries(st.from_regex(r"[a-z_]{1,8}", fullmatch=True), _text, max_size=5))
def test_format_parse_round_trip(fields):
    fields = {k: v for k, v in fields.items() if k not in FIXED_KEYS}
    parsed = parse_record(format_record(Record("x", fields)))
    for k, v in fields.items():
        assert parsed[k] == v
