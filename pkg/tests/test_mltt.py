"""MLTT 前端测试：解析、打印、类型检查、判断性相等、解释与上下文项"""

import pytest

from arena.moves import CHECK, RankedMove
from core.errors import ParseError, TypeCheckError
from cwf import operations as ops
from cwf.judgements import type_rank
from cwf.model import Model
from cwf.syntax import N as CWF_N
from cwf.syntax import Var as CwfVar
from games.game import nat_game
from models.bounds import Bounds
from predicative.registry import GameRegistry, game_key

from mltt.contextual import agrees_with_extension, contextual_term
from mltt.declarations import check_source, load_file, load_text
from mltt.elaborate import elaborate_context, elaborate_definition, elaborate_term, elaborate_type
from mltt.equality import fst_of, judgmental_equal, normalize, snd_of
from mltt.lexer import lex
from mltt.parser import parse_expr, parse_telescope
from mltt.printer import show
from mltt.syntax import (EMPTY, NAT, UNIT, App, Builtin, El, En, Id, Lam, Pair, Pi, RId, Refl, RNat, Sigma, Star,
                         Succ, Universe, Var, Zero, arrow, numeral, numeral_value)
from mltt.typecheck import TypeChecker, typecheck

from conftest import CORPUS

FSN = Builtin("FSN")
GOOD_FILES = ["numerals", "functions", "sigma", "identity", "universes", "contexts"]


@pytest.fixture
def model():
    return Model(GameRegistry(), Bounds(alphabet=3, depth=10))


def corpus(name):
    return load_file(CORPUS / f"{name}.mltt")


# ---- 解析 ----

def test_lambda_parses_to_de_bruijn():
    assert parse_expr("fun (x : N) -> succ x") == Lam(NAT, Succ(Var(0)))


def test_pi_over_el():
    assert parse_expr("Pi (x : N) . El (FSN x)") == Pi(NAT, El(App(FSN, Var(0))))


def test_recursor_with_scoped_binders():
    e = parse_expr("R_N(x. N, zero, x y. succ y, 3)")
    assert e == RNat(NAT, Zero(), Succ(Var(0)), numeral(3))


def test_recursor_without_binders_adds_anonymous_ones():
    e = parse_expr("R_N(N, c, d, n)", ["c", "d", "n"])
    assert isinstance(e, RNat)
    assert (e.zero_case, e.succ_case, e.target) == (Var(2), Var(3), Var(0))


def test_arrows_associate_to_the_right():
    assert parse_expr("N -> N -> N") == arrow(NAT, arrow(NAT, NAT))


def test_application_associates_to_the_left():
    assert parse_expr("f x y", ["f", "x", "y"]) == App(App(Var(2), Var(1)), Var(0))


def test_tuples_nest_to_the_right():
    assert parse_expr("(1, 2, 3)") == Pair(numeral(1), Pair(numeral(2), numeral(3)))


def test_binder_names_do_not_matter():
    assert parse_expr("fun (x : N) -> x") == parse_expr("fun (y : N) -> y")


def test_grouped_binders():
    assert parse_expr("fun (a b : N) -> a") == Lam(NAT, Lam(NAT, Var(1)))


def test_unbound_variable_is_located():
    with pytest.raises(ParseError) as e:
        parse_expr("fun (x : N) -> y")
    assert (e.value.line, e.value.column) == (1, 16)


def test_underscore_never_resolves():
    with pytest.raises(ParseError):
        parse_expr("fun (_ : N) -> _")


def test_wrong_number_of_binders():
    with pytest.raises(ParseError):
        parse_expr("R_N(x y. N, zero, x y. y, 0)")


def test_lexer_rejects_unknown_characters():
    with pytest.raises(ParseError):
        lex("def x : N = #")


def test_comments_and_universe_tokens():
    kinds = [t.kind for t in lex("U12 -- 注释\nU")]
    assert kinds == ["universe", "ident", "eof"]


def test_telescope():
    tel = parse_telescope("(A : U0, a : El A)")
    assert tel == (("A", Universe(0)), ("a", El(Var(0))))


# ---- 打印 ----

@pytest.mark.parametrize("text", [
    "fun (x : N) -> succ x",
    "Pi (x : N) . El (FSN x)",
    "N -> N -> N",
    "(N -> N) -> N",
    "Sigma (x : N) . Id N x x",
    "R_N(x. N, zero, x y. succ (succ y), 3)",
    "R_Id(x y p. Id N x y, z. refl z, 1, 1, refl 1)",
    "R_S(z. N, x y. x, (1, 2))",
    "En (Pi (n : N) . El (FSN n))",
    "fun (f : N -> N) -> fun (x : N) -> f (f x)",
])
def test_printing_reparses_to_the_same_term(text):
    e = parse_expr(text)
    assert parse_expr(show(e)) == e


def test_numerals_print_as_digits():
    assert show(numeral(3)) == "3"
    assert show(Zero()) == "zero"
    assert show(Succ(Var(0)), ["n"]) == "succ n"


def test_shadowed_names_are_freshened():
    e = Lam(NAT, Lam(NAT, Var(1), "x"), "x")
    assert show(e) == "fun (x : N) -> fun (x1 : N) -> x"
    assert parse_expr(show(e)) == e


def test_used_anonymous_binder_is_named():
    assert show(Lam(NAT, Var(0), "_")) == "fun (x : N) -> x"
    assert show(arrow(NAT, NAT)) == "N -> N"


# ---- 类型检查 ----

def test_zero_is_a_natural_of_rank_one():
    assert typecheck((), Zero()).type == NAT
    assert typecheck((), NAT).rank == 1


def test_universe_ranks():
    assert typecheck((), Universe(0)).rank == 2
    assert typecheck((), Pi(NAT, Universe(0))).rank == 2
    assert typecheck((), Universe(3)).rank == 5


def test_el_of_fsn_has_rank_one():
    derivation = typecheck((), El(App(FSN, numeral(1))))
    assert (derivation.rule, derivation.rank) == ("U-Elim", 1)


def test_codes_live_one_level_below_their_rank():
    assert typecheck((), En(NAT)).type == Universe(0)
    assert typecheck((), En(Universe(0))).type == Universe(1)


def test_cumulativity():
    checker = TypeChecker()
    assert checker.check((), En(NAT), Universe(1)).rule == "U-Cumul"
    with pytest.raises(TypeCheckError) as e:
        checker.check((), En(Universe(0)), Universe(0))
    assert e.value.rule == "U-Cumul"


def test_successor_of_unit_cites_its_rule():
    with pytest.raises(TypeCheckError) as e:
        typecheck((("x", UNIT),), Succ(Var(0)))
    assert e.value.rule == "N-IntroSucc"


def test_application_of_a_numeral():
    with pytest.raises(TypeCheckError) as e:
        typecheck((), App(numeral(3), numeral(4)))
    assert e.value.rule == "Π-Elim"


def test_types_are_not_terms():
    with pytest.raises(TypeCheckError) as e:
        TypeChecker().infer((), NAT)
    assert e.value.rule == "U-Intro"


def test_dependent_pair_checks_against_sigma():
    ty = Sigma(NAT, Id(NAT, Var(0), Var(0)))
    derivation = TypeChecker().check((), Pair(numeral(1), Refl(numeral(1))), ty)
    assert derivation.rule == "Σ-Intro"


def test_derivation_tree_renders_rules():
    derivation = typecheck((), Succ(Zero()))
    assert derivation.rules() == ["N-IntroSucc", "N-IntroZero"]
    assert "[N-IntroSucc]" in derivation.render()
    assert derivation.to_dict()["premises"][0]["rule"] == "N-IntroZero"


def test_term_equality_judgement():
    checker = TypeChecker()
    applied = parse_expr("(fun (x : N) -> succ x) 2")
    derivation = checker.check_equal((), applied, numeral(3), NAT)
    assert derivation.rule == "Tm-Eq"
    assert "≡" in derivation.conclusion()
    with pytest.raises(TypeCheckError) as e:
        checker.check_equal((), applied, numeral(4), NAT)
    assert e.value.rule == "Tm-Eq"


def test_conversion_through_computation():
    ty = Id(NAT, App(App(parse_expr("fun (m n : N) -> R_N(x. N, m, x y. succ y, n)"), numeral(1)), numeral(1)),
            numeral(2))
    assert TypeChecker().check((), Refl(numeral(2)), ty).rule == "Tm-Conv"


# ---- 判断性相等 ----

def test_beta():
    assert judgmental_equal(App(Lam(NAT, Succ(Var(0))), numeral(2)), numeral(3))


def test_recursion_computes():
    double = parse_expr("R_N(x. N, zero, x y. succ (succ y), 4)")
    assert normalize(double) == numeral(8)


def test_eta_for_functions():
    ctx = (("f", arrow(NAT, NAT)),)
    assert judgmental_equal(Lam(NAT, App(Var(1), Var(0))), Var(0), ctx)


def test_unit_uniqueness():
    assert judgmental_equal(Var(0), Star(), (("u", UNIT),))
    assert judgmental_equal(Var(0), Var(1), (("a", UNIT), ("b", UNIT)), UNIT)
    assert not judgmental_equal(Var(0), Var(1), (("a", NAT), ("b", NAT)), NAT)


def test_sigma_uniqueness():
    p = Var(0)
    assert normalize(Pair(fst_of(NAT, p), snd_of(NAT, NAT, p))) == p


def test_identity_computation():
    e = RId(Id(NAT, Var(2), Var(1)), Refl(Var(0)), numeral(1), numeral(1), Refl(numeral(1)))
    assert normalize(e) == Refl(numeral(1))


def test_decoding_an_encoding():
    assert judgmental_equal(El(En(NAT)), NAT)


def test_no_congruence_under_en():
    assert not judgmental_equal(En(El(En(NAT))), En(NAT))


def test_distinct_numerals_differ():
    assert not judgmental_equal(numeral(2), numeral(3), (), NAT)


# ---- 语料 ----

@pytest.mark.parametrize("name", GOOD_FILES)
def test_corpus_files_check(name):
    report = check_source(corpus(name))
    assert report.parse_errors == []
    assert report.ok, report.summary()


@pytest.mark.parametrize("name", GOOD_FILES)
def test_rewriting_preserves_types(name):
    checker = TypeChecker()
    for definition in corpus(name).definitions.values():
        checker.check(definition.telescope, normalize(definition.term), definition.ty)


def test_ill_typed_corpus():
    report = check_source(corpus("ill_typed"))
    assert [(e.line, e.column) for e in report.parse_errors] == [(7, 19)]
    rules = {name: result.error.rule for name, result in report.results.items() if not result.ok}
    assert rules == {"bad_succ": "N-IntroSucc", "bad_app": "Π-Elim", "bad_code": "U-Cumul", "bad_body": "Tm-Conv"}
    assert report.results["after_error"].ok
    assert not report.ok


def test_prelude_is_not_reported():
    report = check_source(load_text("def one : N = 1"))
    assert list(report.results) == ["one"]
    assert "1/1" in report.summary()


def test_context_definitions_stay_in_their_context():
    source = load_text("ctx G = (x : N)\ndef a in G : N = x\ndef b : N = a")
    assert len(source.errors) == 1
    assert "a" in source.definitions and "b" not in source.definitions


# ---- 解释 ----

def test_empty_context_is_the_terminal_game():
    assert elaborate_context(()) == ()


def test_variable_and_successor():
    ctx = (("x", NAT),)
    assert elaborate_term(ctx, Var(0)) == CwfVar((CWF_N,), 0)
    assert elaborate_term(ctx, Succ(Var(0))) == ops.succ(CwfVar((CWF_N,), 0))


@pytest.mark.parametrize("ty", [
    NAT, UNIT, EMPTY, Universe(0), Universe(1), Pi(NAT, Universe(0)), Sigma(NAT, NAT),
    Id(NAT, numeral(1), numeral(1)), El(App(FSN, numeral(1))),
])
def test_ranks_agree_with_the_model(ty):
    assert type_rank(elaborate_type((), ty)) == typecheck((), ty).rank


@pytest.mark.parametrize("k", [0, 1, 5, 32])
def test_numerals_evaluate(model, k):
    assert model.evaluate(elaborate_term((), numeral(k))) == RankedMove(k)


@pytest.mark.parametrize("file, name", [
    ("numerals", "five"), ("functions", "six"), ("functions", "seven"), ("functions", "four"),
    ("sigma", "first"), ("sigma", "second"),
])
def test_evaluation_agrees_with_normalization(model, file, name):
    definition = corpus(file).definitions[name]
    expected = normalize(definition.term)
    value = model.evaluate(elaborate_definition(definition))
    assert value == RankedMove(numeral_value(expected))




def test_star_evaluates_to_the_unit_answer(model):
    assert model.evaluate(elaborate_term((), Star())) == CHECK


def test_code_of_nat_names_the_nat_game(model):
    name = model.evaluate(elaborate_term((), En(NAT)))
    assert model.registry.decode(name).key == game_key(nat_game())


def test_fsn_code_names_its_fiber(model):
    name = model.evaluate(elaborate_term((), App(FSN, numeral(2))))
    assert model.registry.decode(name).key == "FS(2)"


# ---- 上下文项 ----

def test_empty_telescope_gives_star():
    ct = contextual_term((), [], ())
    assert (ct.term, ct.type) == (Star(), UNIT)


def test_single_component():
    ct = contextual_term((), [numeral(3)], (("x", NAT),))
    assert ct.term == Pair(Star(), numeral(3))
    assert ct.type == Sigma(UNIT, NAT)
    assert normalize(ct.projection(0)) == numeral(3)


def test_dependent_components_project_back():
    delta = (("x", NAT), ("y", Id(NAT, Var(0), Var(0))))
    ct = contextual_term((), [numeral(2), Refl(numeral(2))], delta)
    assert normalize(ct.projection(0)) == numeral(2)
    assert normalize(ct.projection(1)) == Refl(numeral(2))


def test_telescope_mismatch():
    with pytest.raises(TypeCheckError) as e:
        contextual_term((), [numeral(1)], (("x", NAT), ("y", NAT)))
    assert e.value.rule == "Σ-Intro"
    with pytest.raises(TypeCheckError) as e:
        contextual_term((), [Star()], (("x", NAT),))
    assert e.value.rule == "Σ-Intro"


def test_contextual_term_behaves_like_the_extension_chain(model):
    ct = contextual_term((), [numeral(1), numeral(2)], (("x", NAT), ("y", NAT)))
    assert agrees_with_extension(model, ct, depth=10, bound=2).equivalent
