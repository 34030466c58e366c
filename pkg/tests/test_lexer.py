import pytest

from cam.javasrc.lexer import LexError, Token, reassemble, tokenize
from fixtures import CASES

TRICKY = [
    "",
    "   \t\n  ",
    "int x = 0x1F_2aL;\n",
    "double d = 1_000.5e-3f;",
    "float f = 0b1010 + .5d;",
    "char c = '\\n'; char d = '\\'';",
    'String s = "a\\"b\\\\";',
    "a >>>= b >>> c >> d > e;",
    "Runnable r = () -> {};",
    "java.util.function.Function<String, String> f = String::trim;",
    "void f(int... xs) {}",
    "@interface A {}\r\n",
    "// line comment no newline",
    "/* block\n   spanning */ class X {}",
    "x = y /*inline*/ + z; // tail\n",
    "Map<String, List<Integer>> m;",
]


@pytest.mark.parametrize("text", TRICKY)
def test_reassemble_is_lossless(text):
    assert reassemble(tokenize(text)) == text


@pytest.mark.parametrize("case", CASES, ids=lambda c: c.file)
def test_reassemble_fixture_sources(case):
    assert reassemble(tokenize(case.source)) == case.source


def kinds(text):
    return [(t.kind, t.lexeme) for t in tokenize(text) if t.kind != "eof"]


def test_keywords_and_identifiers():
    got = kinds("class Foo extends true nullx null")
    assert got == [
        ("keyword", "class"),
        ("identifier", "Foo"),
        ("keyword", "extends"),
        ("keyword", "true"),
        ("identifier", "nullx"),
        ("keyword", "null"),
    ]


def test_numeric_literal_kinds():
    assert kinds("0 12L 0x1F 0b10 1_0")[0][0] == "literal-int"
    for lex in ("1.5", "1e3", ".25", "2f", "3D", "0x1p3", "1_0.5"):
        assert kinds(lex) == [("literal-float", lex)]
    assert kinds("07")[0] == ("literal-int", "07")


def test_string_and_char_literals():
    assert kinds('"hi"') == [("literal-string", '"hi"')]
    assert kinds("'x'") == [("literal-char", "'x'")]
    assert kinds("'\\u0041'") == [("literal-char", "'\\u0041'")]


def test_symbol_classification():
    table = {
        "->": "operator",
        "::": "separator",
        "...": "separator",
        "@": "separator",
        "?": "operator",
        ":": "operator",
        ">>": "operator",
        ">>>=": "operator",
        "(": "separator",
        ";": "separator",
        ".": "separator",
    }
    for lexeme, kind in table.items():
        assert kinds(lexeme) == [(kind, lexeme)]


def test_glued_shift_is_one_token():
    assert kinds("a >> b")[1] == ("operator", ">>")
    assert kinds("List<List<String>> x")[5] == ("operator", ">>")


def test_comment_tokens():
    got = kinds("// one\n/* two */ x")
    assert got == [
        ("comment-line", "// one"),
        ("comment-block", "/* two */"),
        ("identifier", "x"),
    ]


def test_eof_sentinel_holds_trailing_whitespace():
    toks = tokenize("x  \n\t")
    assert toks[-1] == Token("eof", "", 2, 2)
    assert toks[-1].preceding == "  \n\t"


def test_positions():
    toks = tokenize("ab\n  cd")
    assert (toks[0].line, toks[0].column) == (1, 1)
    assert (toks[1].line, toks[1].column) == (2, 3)


@pytest.mark.parametrize(
    "text",
    [
        '"open',
        "'x",
        "'ab\n'",
        '"line\nbreak"',
        "/* never closed",
        "0x;",
        "0b2",
        "1abc",
        "`tick`",
        "#define",
        '"esc\\',
    ],
)
def test_lex_errors(text):
    with pytest.raises(LexError):
        tokenize(text)


def test_lex_error_carries_position():
    with pytest.raises(LexError) as info:
        tokenize("ok\n  #")
    assert info.value.line == 2
    assert info.value.column == 3
