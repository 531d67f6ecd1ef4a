from fractions import Fraction

import pytest

from brauercat.category import Morphism, e_sum, generator_s, generator_u
from brauercat.cli import main
from brauercat.expr import (ExprError, evaluate, format_morphism, parse_expr,
                            parse_morphism)
from brauercat.matchings import Diagram, PerfectMatching


def run(expr, **kwargs):
    return evaluate(parse_expr(expr), **kwargs)


def test_idempotent_expression():
    got = run("E(2) * E(2)", delta=Fraction(-2))
    assert got == e_sum(1)


def test_diagram_literal():
    got = run("(1,3)(2,4)")
    assert got == Morphism.from_diagram(
        Diagram(0, 4, PerfectMatching(((1, 3), (2, 4)))))


def test_generator_relation():
    assert run("u_1 o s_1") == Morphism.from_diagram(generator_u(1, 2))
    assert run("s_1 o s_1") == Morphism.identity(2)
    assert run("u_1 o u_1", delta=Fraction(-2)) \
        == Morphism.from_diagram(generator_u(1, 2), Fraction(-2)).scaled(-2)


def test_precedence():
    # composition binds tighter than tensor: (u o u) x id, never u o (u x id)
    got = run("u_1 o u_1 x id_1", delta=Fraction(-2))
    want = (Morphism.from_diagram(generator_u(1, 2), Fraction(-2)).scaled(-2)
            @ Morphism.identity(1, Fraction(-2)))
    assert got == want
    assert run("1/2*(1,2)(3,4) + 1/2*(1,4)(2,3)").terms \
        == {Diagram(0, 4, PerfectMatching(((1, 2), (3, 4)))): Fraction(1, 2),
            Diagram(0, 4, PerfectMatching(((1, 4), (2, 3)))): Fraction(1, 2)}


def test_unicode_aliases():
    assert run("u_1 ∘ s_1") == run("u_1 o s_1")
    assert run("id_1 ⊗ id_1") == run("id_1 x id_1")


def test_scalars_and_negation():
    assert run("3/4 * 2") == Fraction(3, 2)
    got = run("-(1,2)(3,4) - (1,4)(2,3)")
    assert all(c == -1 for c in got.terms.values())


def test_shaped_literal_and_names():
    assert run("2|2:(1,2)(3,4)") == Morphism.from_diagram(generator_u(1, 2))
    assert run("R_1(0)", delta=Fraction(-2)) == Morphism.identity(2, Fraction(-2))
    pf = run("Pf()", n=1)
    assert len(pf.terms) == 3
    pf2 = run("Pf((5,6))", n=1)
    assert (pf2.r, pf2.s) == (0, 6) and len(pf2.terms) == 3


def test_syntax_errors_have_positions():
    with pytest.raises(ExprError, match="column"):
        parse_expr("(1,")
    with pytest.raises(ExprError, match="column 5"):
        parse_expr("u_1 %")
    with pytest.raises(ExprError, match="unknown name"):
        parse_expr("frob_1")


def test_shape_errors_report_both_shapes():
    with pytest.raises(ExprError, match=r"\(2,2\) and \(0,4\)"):
        run("u_1 o (1,2)(3,4)")
    with pytest.raises(ExprError, match="add"):
        run("id_1 + id_2")
    with pytest.raises(ExprError, match="composition needs"):
        run("u_1 o 2")
    # an ambient strand count can also be forced explicitly
    assert run("u_1 o id_3").r == 3


def test_round_trip_is_idempotent():
    texts = [
        "1*(1,2)(3,4)",
        "1/2*2|2:(1,2)(3,4) + 1/2*2|2:(1,3)(2,4) + 1/2*2|2:(1,4)(2,3)",
        "-1*(1,2)(3,4) - 1*(1,4)(2,3)",
    ]
    for text in texts:
        m = parse_morphism(text)
        canonical = format_morphism(m)
        assert format_morphism(parse_morphism(canonical)) == canonical


def test_parse_morphism_rejects_scalar():
    with pytest.raises(ExprError, match="scalar"):
        parse_morphism("3/4")


# --- command line ---

def test_cli_csp_verify(capsys):
    assert main(["csp-verify", "--r", "2", "--n", "1"]) == 0
    out = capsys.readouterr().out
    assert "result: PASS" in out
    assert "P: q^2 + q^4" in out


def test_cli_csp_tsv_deterministic(capsys):
    assert main(["csp-verify", "--grid", "r<=3,n<=2", "--format", "tsv"]) == 0
    first = capsys.readouterr().out
    assert main(["csp-verify", "--grid", "r<=3,n<=2", "--format", "tsv"]) == 0
    assert capsys.readouterr().out == first
    assert len(first.strip().splitlines()) == 6


def test_cli_ev_rank(capsys):
    assert main(["ev-rank", "--r", "3", "--n", "1"]) == 0
    assert capsys.readouterr().out == "rank=5 noncrossing=5 MATCH\n"


def test_cli_enumerate_blocked_count(capsys):
    assert main(["enumerate", "--what", "X", "--r", "4", "--n", "2",
                 "--k", "2", "--count"]) == 0
    assert capsys.readouterr().out == "6\n"


def test_cli_enumerate_lines(capsys):
    assert main(["enumerate", "--what", "matchings", "--r", "2"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == ["(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"]


def test_cli_compose_and_errors(capsys):
    assert main(["compose", "E(2) * E(2)"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("1/2*")
    assert main(["compose", "u_1 o (1,2)(3,4)"]) == 2
    assert "(2,2) and (0,4)" in capsys.readouterr().err


def test_cli_normal_form(tmp_path, capsys):
    f = tmp_path / "m.txt"
    f.write_text("(1,3)(2,4)\n")
    assert main(["normal-form", str(f), "--n", "1", "--trace"]) == 0
    out = capsys.readouterr().out
    assert "-1*(1,2)(3,4) - 1*(1,4)(2,3)" in out
    assert "steps: 1" in out


def test_cli_idempotent_check(capsys):
    assert main(["idempotent-check", "--n", "1"]) == 0
    assert "PASS" in capsys.readouterr().out
    assert main(["idempotent-check", "--n", "1", "--delta", "-4"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_cli_fake_degree(capsys):
    assert main(["fake-degree", "--shape", "2,2"]) == 0
    assert capsys.readouterr().out == "q^2 + q^4\n"
    assert main(["fake-degree", "--kind", "matchings", "--r", "2", "--n", "2"]) == 0
    assert capsys.readouterr().out == "1 + q^2 + q^4\n"


def test_cli_frobenius(capsys):
    assert main(["frobenius", "--kind", "fundamental", "--r", "2", "--n", "1",
                 "--k", "3"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "1/2*p[1,1] - 1/2*p[2]"


def test_cli_checks(capsys):
    assert main(["littlewood-check", "--r", "3"]) == 0
    assert capsys.readouterr().out.count("PASS") == 3
    assert main(["kronecker-check", "--r", "4"]) == 0
    assert capsys.readouterr().out.count("PASS") == 4


def test_cli_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["enumerate"])
    assert exc.value.code == 2
