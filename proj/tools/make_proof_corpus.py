#!/usr/bin/env python3
"""Writes the derivation corpus under tests/data/proofs.

Every line of every derivation is cited by a later line and the last line
comes from RG or MP, so changing any single formula breaks some check.
"""

import json
import sys
from pathlib import Path


def line(i, formula, rule, refs=None, aux=None):
    out = {"id": i, "formula": formula, "rule": rule}
    if refs:
        out["refs"] = refs
    if aux:
        out["aux"] = aux
    return out


def generalization(a, x):
    return [
        line(1, a, "ID" if "=" in a and "(" not in a else "TAUT"),
        line(2, f"[]({a})", "RG", [1]),
        line(3, f"[]({a}) -> forall {x}. {a}", "MIX"),
        line(4, f"forall {x}. {a}", "MP", [2, 3]),
    ]


def t_detach(a):
    return [
        line(1, a, "TAUT"),
        line(2, f"[]({a})", "RG", [1]),
        line(3, f"[]({a}) -> ({a})", "T"),
        line(4, a, "MP", [2, 3]),
    ]


def k_distribution(a, b):
    return [
        line(1, f"{a} -> {b}", "TAUT"),
        line(2, f"[]({a} -> {b})", "RG", [1]),
        line(3, f"[]({a} -> {b}) -> []({a}) -> []({b})", "K"),
        line(4, f"[]({a}) -> []({b})", "MP", [2, 3]),
    ]


def bang_five(a):
    return [
        line(1, f"~[]({a})", "BANG"),
        line(2, f"~[]({a}) -> []~[]({a})", "5"),
        line(3, f"[]~[]({a})", "MP", [1, 2]),
    ]


def bang_rg(a):
    return [
        line(1, f"~[]({a})", "BANG"),
        line(2, f"[]~[]({a})", "RG", [1]),
    ]


def all1(body, x, y):
    inst = body.replace(f"({x})", f"({y})")
    a = f"(forall {x}. {body}) -> {inst}"
    return [
        line(1, a, "ALL1", aux={"from": x, "to": y}),
        line(2, f"[]({a})", "RG", [1]),
        line(3, f"[]({a}) -> forall {y}. {a}", "MIX"),
        line(4, f"forall {y}. {a}", "MP", [2, 3]),
    ]


def all2(a, b, x):
    return [
        line(1, f"(forall {x}. {a} -> {b}) -> {a} -> forall {x}. {b}", "ALL2"),
        line(2, f"[]((forall {x}. {a} -> {b}) -> {a} -> forall {x}. {b})", "RG", [1]),
    ]


def eq(formula, aux=None):
    return [
        line(1, formula, "EQ", aux=aux),
        line(2, f"[]({formula})", "RG", [1]),
    ]


def taut_rg(a):
    return [
        line(1, a, "TAUT"),
        line(2, f"[]({a})", "RG", [1]),
    ]


def certificate(domain, interpretation):
    return {
        "worlds": ["w0"],
        "domains": {"w0": domain},
        "interpretation": {k: {"w0": v} for k, v in interpretation.items()},
        "valuation": {},
        "world": "w0",
    }


def bang_certificate(a, cert):
    return [
        line(1, f"~[]{a}", "BANG", aux={"certificate": cert}),
        line(2, f"~[]{a} -> []~[]{a}", "5"),
        line(3, f"[]~[]{a}", "MP", [1, 2]),
    ]


def box_exists_identity(x, y):
    ex = f"exists {y}. {x} = {y}"
    nall = f"~(forall {y}. ~({x} = {y}))"
    all_neg = f"forall {x}. ~({ex})"
    return [
        line(1, f"{x} = {x}", "ID"),
        line(2, f"(forall {y}. ~({x} = {y})) -> ~({x} = {x})", "ALL1", aux={"from": y, "to": x}),
        line(3, f"((forall {y}. ~({x} = {y})) -> ~({x} = {x})) -> {x} = {x} -> {nall}", "TAUT"),
        line(4, f"{x} = {x} -> {nall}", "MP", [2, 3]),
        line(5, ex, "MP", [1, 4]),
        line(6, f"({all_neg}) -> ~({ex})", "ALL1", aux={"from": x, "to": x}),
        line(7, f"(({all_neg}) -> ~({ex})) -> ({ex}) -> ~({all_neg})", "TAUT"),
        line(8, f"({ex}) -> exists {x}. {ex}", "MP", [6, 7]),
        line(9, f"exists {x}. {ex}", "MP", [5, 8]),
        line(10, f"[]exists {x}. {ex}", "RG", [9]),
    ]


def corpus():
    proofs = {}
    for x in ["x", "y", "z"]:
        proofs[f"generalize_identity_{x}"] = generalization(f"{x} = {x}", x)
    for p in ["P", "Q", "S"]:
        proofs[f"generalize_excluded_middle_{p}"] = generalization(f"{p}(x) | ~{p}(x)", "x")
    proofs["t_detach_implication"] = t_detach("P(x) -> P(x)")
    proofs["t_detach_boxed_excluded_middle"] = t_detach("[]P(x) | ~[]P(x)")
    proofs["t_detach_peirce"] = t_detach("((P(x) -> Q(y)) -> P(x)) -> P(x)")
    proofs["t_detach_quantified"] = t_detach("(forall x. P(x)) -> forall x. P(x)")
    proofs["k_weakening"] = k_distribution("P(x)", "P(x) | Q(x)")
    proofs["k_conjunction"] = k_distribution("P(x) & Q(y)", "P(x)")
    proofs["k_diamond"] = k_distribution("<>Q(x) & P(x)", "<>Q(x)")
    proofs["k_identity"] = k_distribution("x = y", "x = y | P(z)")
    proofs["k_quantified"] = k_distribution("(forall x. P(x))", "(forall x. P(x)) | Q(y)")
    for name, a in [
        ("atom", "P(x)"),
        ("identity", "x = y"),
        ("distinctness", "~(x = y)"),
        ("exists", "exists x. P(x)"),
        ("mixed", "(forall x. P(x)) | Q(y)"),
    ]:
        proofs[f"bang_five_{name}"] = bang_five(a)
    for name, a in [
        ("negated_atom", "~P(x)"),
        ("two_elements", "exists x. exists y. ~(x = y)"),
        ("all_equal", "forall x. forall y. x = y"),
        ("implication", "P(x) -> Q(x)"),
    ]:
        proofs[f"bang_necessitated_{name}"] = bang_rg(a)
    proofs["all1_rename"] = all1("P(x)", "x", "y")
    proofs["all1_same"] = all1("Q(x)", "x", "x")
    proofs["all1_mixed"] = all1("P(x) -> Q(z)", "x", "y")
    proofs["all1_conjunction"] = all1("P(x) & S(x)", "x", "z")
    proofs["all1_boxed_untouched"] = [
        line(1, "(forall x. P(x) & []Q(x)) -> P(y) & []Q(x)", "ALL1", aux={"from": "x", "to": "y"}),
        line(2, "[]((forall x. P(x) & []Q(x)) -> P(y) & []Q(x))", "RG", [1]),
    ]
    proofs["all2_atom"] = all2("Q(y)", "P(x)", "x")
    proofs["all2_boxed_antecedent"] = all2("[]P(x)", "Q(x)", "x")
    proofs["all2_identity"] = all2("y = z", "P(x) | x = y", "x")
    proofs["all2_nested"] = all2("(forall x. P(x))", "Q(x)", "x")
    proofs["eq_atom"] = eq("x = y & P(x) -> P(y)")
    proofs["eq_partial"] = eq("x = y & (P(x) & Q(x)) -> P(y) & Q(x)", {"from": "x", "to": "y", "occurrences": [0]})
    proofs["eq_inferred_partial"] = eq("x = y & (P(x) | x = z) -> P(x) | y = z")
    proofs["eq_symmetry"] = eq("x = y & x = x -> y = x", {"from": "x", "to": "y", "occurrences": [0]})
    proofs["eq_lowered_conjunction"] = eq("~(x = y -> ~P(x)) -> P(y)")
    proofs["eq_under_quantifier"] = eq("x = y & (forall z. P(z) -> Q(x)) -> forall z. P(z) -> Q(y)")
    proofs["diamond_five"] = [
        line(1, "<>~P(x)", "BANG"),
        line(2, "<>~P(x) -> []<>~P(x)", "5"),
        line(3, "[]<>~P(x)", "MP", [1, 2]),
    ]
    proofs["diamond_excluded_middle"] = taut_rg("<>P(x) | ~<>P(x)")
    proofs["diamond_k"] = k_distribution("[]P(x)", "[]P(x) | <>Q(x)")
    proofs["exists_generalized"] = generalization("(exists x. P(x)) | ~(exists x. P(x))", "y")
    proofs["bang_certificate_binary"] = bang_certificate("R(x, y)", certificate(["a"], {"R/2": []}))
    proofs["bang_certificate_reflexive"] = bang_certificate(
        "R(x, x)", certificate(["a", "b"], {"R/2": [["a", "b"]]}))
    proofs["box_exists_identity_xy"] = box_exists_identity("x", "y")
    proofs["box_exists_identity_zu"] = box_exists_identity("z", "u")
    proofs["taut_rg_modal_weakening"] = taut_rg("[]P(x) -> <>Q(x) -> []P(x)")
    proofs["taut_rg_contraposition"] = taut_rg("(P(x) -> Q(x)) -> ~Q(x) -> ~P(x)")
    proofs["taut_rg_iff"] = taut_rg("(P(x) <-> Q(x)) <-> (Q(x) <-> P(x))")
    return proofs


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent.parent / "tests/data/proofs")
    out.mkdir(parents=True, exist_ok=True)
    proofs = corpus()
    for old in out.glob("*.json"):
        old.unlink()
    for name, lines in sorted(proofs.items()):
        (out / f"{name}.json").write_text(json.dumps({"lines": lines}, indent=2) + "\n")
    print(f"{len(proofs)} derivations written to {out}")


if __name__ == "__main__":
    main()
