"""Worked CLI examples pinned by golden files: (name, argv, exit code)."""

P = "x + x^2*y"

CASES = [
    ("parse", ["parse", "(x+1)^2 - 2*x"], 0),
    ("jacdet", ["jacdet", "x -> x + x^2*y; y -> x^2"], 0),
    ("keller_no", ["keller", "x -> x^2; y -> y^2"], 1),
    ("keller_yes", ["keller", "x -> x + y^2; y -> y"], 0),
    ("dependent", ["dependent", P, "(x + x^2*y)^2 + 3*(x + x^2*y)"], 0),
    ("independent", ["dependent", "x", "y"], 1),
    ("gb_unit", ["gb", "1 + 2*x*y", "x^2"], 0),
    ("gb_lex", ["gb", "x^2 + y^2 - 1", "x - y", "--order", "lex"], 0),
    ("member", ["member", "1", "1 + 2*x*y", "x^2"], 0),
    ("not_member", ["member", "1", "x", "y"], 1),
    ("unimodular", ["unimodular", P], 0),
    ("not_unimodular", ["unimodular", "x^2 + y^2"], 1),
    ("subalg", ["subalg", "x", "x + y^2", "y"], 0),
    ("not_subalg", ["subalg", "x", "x^2", "y^2"], 1),
    ("isauto", ["isauto", "x -> x + y^2; y -> y"], 0),
    ("not_auto", ["isauto", "x -> x + x^2*y; y -> x^2"], 1),
    ("polygon", ["polygon", P], 0),
    ("similar", ["similar", P, "(x + x^2*y)^2"], 0),
    ("not_similar", ["similar", P, "x^3"], 1),
    ("thm13", ["thm13", P, "x^2"], 1),
    ("subduce", ["subduce", "(x + x^2*y)^2 + 3*(x + x^2*y)", P], 0),
    ("not_subduce", ["subduce", "y", "x"], 1),
    ("amreduce", ["amreduce", "(x + x^2*y)^2 + (x + x^2*y)", "(x + x^2*y)^2"], 0),
    ("verify_retraction", ["verify-retraction", "x -> x + x^2*y; y -> 0"], 0),
    ("not_idempotent", ["verify-retraction", "x -> x^2; y -> 0"], 1),
    ("normalize", ["normalize", "x -> 0; y -> y + y^2*x"], 0),
    ("cor12", ["cor12", P, "x -> x; y -> 0"], 0),
    ("cor31", ["cor31", P], 0),
    ("cor31_extension", ["cor31", "x + x^2 + y^2"], 1),
    ("cor14", ["cor14", P], 0),
    ("trace", ["trace", "x -> x^2; y -> y^2", "--kmax", "3"], 0),
    ("trace_truncated", ["trace", "x -> x^2; y -> y^3", "--kmax", "10", "--degree-cap", "100"], 3),
    ("fixed", ["fixed", "x -> x + y^2; y -> y", "--degree", "1"], 0),
    ("cor17", ["cor17", "x -> x + y^2; y -> y"], 0),
    ("cor17_not_keller", ["cor17", "x -> x^2; y -> y^2"], 1),
    ("random_tame", ["random-tame", "--seed", "7"], 0),
]
