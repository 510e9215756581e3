# Copyright 2026 The nsra Authors.
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

import os
import pathlib

import pytest

import nsra

ROOT = pathlib.Path(os.environ.get("NSRA_SOURCE_DIR", pathlib.Path(__file__).parents[2]))


def read(relative):
    return (ROOT / relative).read_text()


def test_compile_intro_query():
    ql = nsra.compile("An object of Cipher invokes init.")
    assert ql.startswith("from MethodAccess init\n")
    assert ql.endswith("select init\n")


def test_matches_reference_after_normalization():
    ql = nsra.compile(read("queries/algorithm_vs_mode.nsra"))
    reference = read("tests/golden/algorithm_vs_mode.ql")
    assert nsra.normalize_ql(ql) == nsra.normalize_ql(reference)


def test_emit_ir_and_header():
    ir = nsra.compile("An object of Cipher invokes init.", emit="ir")
    assert ir.startswith("(decl MethodAccess init)")
    ql = nsra.compile("An object of Cipher invokes init.", header="// q")
    assert ql.startswith("// q\nfrom")
    with pytest.raises(ValueError):
        nsra.compile("An object of Cipher invokes init.", emit="xml")


def test_errors_carry_kind_and_span():
    text = "getInstance precede init."
    with pytest.raises(nsra.NsraError) as info:
        nsra.compile(text)
    start, end = info.value.span
    assert info.value.kind == "SyntaxError"
    assert text[start:end] == "precede"


def test_profile_errors_carry_line():
    with pytest.raises(nsra.NsraError) as info:
        nsra.compile("x is 1.", profile="receiver = getReceiverType()\nbroken\n")
    assert info.value.kind == "ConfigParseError"
    assert info.value.line == 2


def test_profile_overlay():
    ql = nsra.compile(
        'An object of Cipher invokes init. The receiver of init is "C".',
        profile="receiver = getReceiverType() : string\n",
    )
    assert 'init.getReceiverType() = "C"' in ql


def test_warnings_and_english():
    w = nsra.warnings('An object of Cipher invokes init. The type of init\'s first argument is "Widget".')
    assert len(w) == 1 and "Widget" in w[0]
    assert nsra.to_english("init's first argument is 1.") == "first argument of init is 1."


def test_metrics_row():
    n = nsra.halstead_nsra(read("queries/mode_vs_signature.nsra"))
    assert n["length"] == 56
    q = nsra.halstead_ql(read("tests/golden/mode_vs_signature.ql"))
    row = nsra.compare(n, q)
    assert row["reductionPct"] == pytest.approx(100 * (1 - 56 / q["length"]))
    with pytest.raises(nsra.NsraError):
        nsra.compare(n, {"n1": 0, "n2": 0, "N1": 0, "N2": 0})


def test_dump_profile_lists_builtins():
    text = nsra.dump_profile()
    for word in ("algorithm", "argument", "mode", "name", "padding", "type"):
        assert f"\n{word} = " in "\n" + text
