"""Batch front end: load lattice/preference/representation files, run checks
and synthesis, emit deterministic JSON reports.

Exit codes: 0 success/agreement, 1 check failure (violations written to the
report), 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import __version__
from .duality import roundtrip_check, duality_equivalence_report
from .errors import AxiomViolation, LattiminError
from .io import (
    FormatError,
    load_lattice,
    load_preference,
    load_representation,
    representation_to_dict,
    spectrum_to_dict,
)
from .lattice import check_hom, validate_laws
from .preference import check_axiom1, check_axiom2, check_axiom3, axioms12_hold
from .representation import (
    Refutation,
    derive_pref_from_rep,
    factor_check,
    minimal_representation,
    verify_representation,
)
from .spectrum import enumerate_prime_filters
from .testkit import (
    derived_weak_order,
    duplicate_outcome,
    random_distributive_lattice,
    random_representation,
    random_weak_order,
)

import random

log = logging.getLogger("lattimin")

_LOG_LEVELS = {"quiet": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}


def _setup_logging():
    level = _LOG_LEVELS.get(os.environ.get("LM_LOG", "quiet"), logging.ERROR)
    logging.basicConfig(level=level, format="%(levelname)s %(message)s")


def _emit(report, out_path):
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args):
    L = load_lattice(args.lattice, validate=False)
    issues = validate_laws(L)
    report = {
        "valid": not issues,
        "violations": [{"law": i.law, "witness": list(i.witness)} for i in issues],
    }
    return (0 if not issues else 1), report


def cmd_spectrum(args):
    L = load_lattice(args.lattice)
    S = enumerate_prime_filters(L)
    return 0, spectrum_to_dict(S)


def cmd_axioms(args):
    L = load_lattice(args.lattice)
    W = load_preference(args.pref, L)
    v1 = check_axiom1(L, W)
    v2 = check_axiom2(L, W)
    v3 = check_axiom3(L, W)
    report = {
        "axiom1": [list(v) for v in v1],
        "axiom2": [list(v) for v in v2],
        "axiom3": [list(v) for v in v3],
        "satisfied": not (v1 or v2 or v3),
    }
    return (0 if report["satisfied"] else 1), report


def cmd_dualize(args):
    L = load_lattice(args.lattice)
    W = load_preference(args.pref, L)
    cert = roundtrip_check(L, W)
    report = {
        "agreement": cert.agreement,
        "forward_ranks": list(cert.forward.ranks),
        "counterexample": list(cert.counterexample) if cert.counterexample else None,
    }
    return (0 if cert.agreement else 1), report


def cmd_represent(args):
    L = load_lattice(args.lattice)
    W = load_preference(args.pref, L)
    try:
        R = minimal_representation(L, W)
    except AxiomViolation as e:
        report = {
            "error": "axiom-violation",
            "violations": {k: [list(t) for t in v] for k, v in e.violations.items()},
        }
        return 1, report
    return 0, representation_to_dict(R)


def cmd_verify(args):
    L = load_lattice(args.lattice)
    W = load_preference(args.pref, L)
    R = load_representation(args.rep, L)
    ok, counterexample = verify_representation(L, W, R)
    report = {
        "verified": ok,
        "counterexample": list(counterexample) if counterexample else None,
    }
    return (0 if ok else 1), report


def cmd_factor(args):
    L = load_lattice(args.lattice)
    W = load_preference(args.pref, L)
    R_other = load_representation(args.rep, L)
    R_min = minimal_representation(L, W)
    result = factor_check(L, W, R_other, R_min)
    if isinstance(result, Refutation):
        return 1, {"factored": False, "witness": list(result.witness)}
    return 0, {
        "factored": True,
        "hom": list(result.mapping),
        "surjective": True,
        "valid_hom": check_hom(result),
    }


def _fuzz_trial(base_seed, trial, max_size, failures):
    seed = base_seed * 1_000_003 + trial
    rng = random.Random(seed)
    L = random_distributive_lattice(max_size, seed)
    counts = dict.fromkeys(
        ("duality_derived", "duality_random", "derived_axioms", "synthesis_verifies", "factoring"), 0
    )

    W_good = derived_weak_order(L, seed + 1)
    rep3 = duality_equivalence_report(L, W_good)
    if rep3.equivalent and rep3.axioms_hold:
        counts["duality_derived"] = 1
    else:
        failures.append({"trial": trial, "check": "duality_derived"})

    W_rand_ranks = random_weak_order(L.n, rng)
    from .preference import WeakOrder

    rep3r = duality_equivalence_report(L, WeakOrder(W_rand_ranks))
    if rep3r.equivalent:
        counts["duality_random"] = 1
    else:
        failures.append({"trial": trial, "check": "duality_random"})

    R_rand = random_representation(L, seed + 2)
    derived = derive_pref_from_rep(R_rand)
    if axioms12_hold(L, derived):
        counts["derived_axioms"] = 1
    else:
        failures.append({"trial": trial, "check": "derived_axioms"})

    R_min = minimal_representation(L, W_good)
    ok, _ = verify_representation(L, W_good, R_min)
    if ok:
        counts["synthesis_verifies"] = 1
    else:
        failures.append({"trial": trial, "check": "synthesis_verifies"})

    factored = True
    if R_min.outcome_count > 0:
        R_alt = duplicate_outcome(R_min, rng.randrange(R_min.outcome_count))
        result = factor_check(L, W_good, R_alt, R_min)
        factored = not isinstance(result, Refutation) and check_hom(result)
    if factored:
        counts["factoring"] = 1
    else:
        failures.append({"trial": trial, "check": "factoring"})
    return counts


def cmd_fuzz(args):
    totals = dict.fromkeys(
        ("duality_derived", "duality_random", "derived_axioms", "synthesis_verifies", "factoring"), 0
    )
    failures = []
    for trial in range(args.trials):
        counts = _fuzz_trial(args.seed, trial, args.max_size, failures)
        for k, v in counts.items():
            totals[k] += v
        log.info("trial %d done", trial)
    report = {
        "seed": args.seed,
        "trials": args.trials,
        "max_size": args.max_size,
        "pass_counts": totals,
        "failures": failures,
    }
    return (0 if not failures else 1), report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lattimin",
        description="Maximin preference representations on finite distributive lattices",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(verb, func, *, lattice=False, pref=False, rep=False, fuzz=False):
        p = sub.add_parser(verb)
        if lattice:
            p.add_argument("--lattice", required=True, metavar="PATH")
        if pref:
            p.add_argument("--pref", required=True, metavar="PATH")
        if rep:
            p.add_argument("--rep", required=True, metavar="PATH")
        if fuzz:
            p.add_argument("--seed", type=int, default=0, metavar="UINT64")
            p.add_argument("--trials", type=int, default=100, metavar="UINT")
            p.add_argument("--max-size", type=int, default=4, metavar="UINT")
        p.add_argument("--out", metavar="PATH")
        p.set_defaults(func=func)

    add("validate", cmd_validate, lattice=True)
    add("spectrum", cmd_spectrum, lattice=True)
    add("axioms", cmd_axioms, lattice=True, pref=True)
    add("dualize", cmd_dualize, lattice=True, pref=True)
    add("represent", cmd_represent, lattice=True, pref=True)
    add("verify", cmd_verify, lattice=True, pref=True, rep=True)
    add("factor", cmd_factor, lattice=True, pref=True, rep=True)
    add("fuzz", cmd_fuzz, fuzz=True)
    return parser


def main(argv=None) -> int:
    _setup_logging()
    args = build_parser().parse_args(argv)
    try:
        code, report = args.func(args)
    except (FormatError,) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except LattiminError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    _emit(report, args.out)
    return code


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
