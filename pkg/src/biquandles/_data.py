"""Printed tables, pairs and braid words, kept as text in cycle notation."""

I = "ι"

# name -> (n, U rows, D rows, printed classification line); a bare string is a repeated row
APPENDIX = {
    "Q^2_1": (2, I, I, "order 2 S, c1 = 4, c2 = 0"),
    "BQ^2_1": (2, "(1 2)", "(1 2)", "order 2 S, DPQ, c1 = 4, c2 = 0"),
    "R^2_1": (2, "(1 2)", I, "order 4 c1 = 4, c2 = 0"),

    "Q^3_1": (3, I, I, "order 2 S, c1 = 6, c2 = 0"),
    "Q^3_2": (3, ["(2 3)", I, I], I, "order 4 c1 = 4, c2 = 2"),
    "Q^3_3": (3, ["(2 3)", "(1 3)", "(1 2)"], I, "order 3 c1 = 3, c2 = 3"),
    "R^3_1": (3, "(1 3 2)", I, "order 6 c1 = 6, c2 = 0"),
    "R^3_2": (3, ["(1 3)", I, "(1 3)"], I, "order 4 c1 = 4, c2 = 2"),
    "R^3_3": (3, "(1 3)", I, "order 4 c1 = 6, c2 = 0"),
    "BQ^3_1": (3, [I, "(2 3)", "(2 3)"], [I, "(2 3)", "(2 3)"], "order 2 S, c1 = 2, c2 = 0"),
    "BQ^3_2": (3, [I, "(2 3)", "(2 3)"], "(2 3)", "order 4 PQ, c1 = 4, c2 = 2"),
    "BQ^3_3": (3, [I, "(1 3 2)", "(1 2 3)"], "(2 3)", "order 3 PQ, c1 = 3, c2 = 3"),
    "BQ^3_4": (3, [I, I, "(1 2)"], [I, I, "(1 2)"], "order 2 S, c1 = 2, c2 = 0"),
    "BQ^3_5": (3, "(2 3)", "(2 3)", "order 2 S, DPQ, c1 = 6, c2 = 0"),
    "BQ^3_6": (3, ["(1 2)", "(2 3)", "(1 3)"], "(1 2 3)", "order 3 PQ, c1 = 3, c2 = 3"),
    "BQ^3_7": (3, "(1 2 3)", "(1 3 2)", "order 2 DPQ, c1 = 6, c2 = 0"),
    "BR^3_1": (3, [I, "(2 3)", "(2 3)"], ["(2 3)", I, I], "order 4 c1 = 2, c2 = 0"),
    "BR^3_2": (3, ["(2 3)", I, I], "(2 3)", "order 4 c1 = 4, c2 = 2"),
    "BR^3_3": (3, "(1 2 3)", "(1 2 3)", "order 6 S, c1 = 6, c2 = 0"),
}

# entries quoted outside the small-size lists (no printed classification line)
QUOTED = {
    "Q^4_1": (4, I, I),
    "BQ^4_3": (4, [I, I, "(2 4 3)", "(2 3 4)"], [I, "(3 4)", "(3 4)", "(3 4)"]),
    "BQ^4_9": (4, [I, "(3 4)", "(3 4)", "(3 4)"], [I, "(3 4)", "(3 4)", "(3 4)"]),
    "BQ^4_19": (4, [I, "(1 3)(2 4)", "(1 4)(2 3)", "(1 2)(3 4)"], "(2 4 3)"),
    "BQ^4_23": (4, [I, I, I, "(1 3 2)"], [I, I, I, "(1 2 3)"]),
    "BQ^4_26": (4, [I, I, "(1 2)(3 4)", "(1 2)(3 4)"], [I, I, "(1 2)(3 4)", "(1 2)(3 4)"]),
    "BQ^4_34": (4, [I, I, I, "(1 3 2)"], ["(2 3)", "(1 3)", "(1 2)", "(1 2 3)"]),
    "BQ^4_38": (4, "(2 3 4)", ["(2 4 3)", "(2 3)", "(3 4)", "(2 4)"]),
    "BQ^4_39": (4, "(2 3 4)", "(2 4 3)"),
    "BQ^4_41": (4, ["(2 3 4)", "(1 3 2)", "(1 4 3)", "(1 2 4)"], "(2 3 4)"),
    "BQ^4_50": (4, "(1 2)(3 4)", "(1 2)(3 4)"),
    "BQ^4_51": (4, ["(1 2)(3 4)", "(1 3)(2 4)", "(1 3)(2 4)", "(1 2)(3 4)"], "(1 2 4 3)"),
    "BQ^4_53": (4, ["(1 2 3 4)", "(1 4 3 2)", "(1 2 3 4)", "(1 4 3 2)"],
                ["(1 2 3 4)", "(1 4 3 2)", "(1 2 3 4)", "(1 4 3 2)"]),
    "BQ^4_56": (4, "(1 2)(3 4)", ["(1 3 2)", "(1 2 4)", "(1 4 3)", "(2 3 4)"]),
    "Q^4_6": (4, ["(2 4)", "(1 3)", "(2 4)", "(1 3)"], I),
    "BQ^6_10": (6, [I, "(1 3 4 5 6)", I, I, I, I],
                ["(3 4 6 5)", "(1 6 5 4 3)", "(1 6 4 5)", "(1 5 6 3)", "(1 4 3 6)", "(1 3 5 4)"]),
    "BQ^6_22": (6, [I, "(1 3 4 5 6)", I, I, I, I],
                ["(3 6)(4 5)", "(1 6 5 4 3)", "(1 4)(5 6)", "(1 6)(3 5)", "(1 3)(4 6)", "(1 5)(3 4)"]),
    "BQ^6_49": (6, ["(3 4 5 6)", I, I, I, I, I],
                ["(3 6 5 4)", "(3 4 5 6)", "(2 4 6 5)", "(2 5 3 6)", "(2 6 4 3)", "(2 3 5 4)"]),
    "BQ^6_230": (6, ["(3 4 5 6)", I, I, I, I, "i"], ["(3 6 5 4)", "i", "i", "i", "i", "i"]),
    "BQ^6_1494": (6, [I, "(1 3 4 5 6)", I, I, I, I], [I, "(1 6 5 4 3)", I, I, I, I]),
}

# constructor aliases: alias -> entry whose class it belongs to
CONSTRUCTOR_ALIASES = {
    "A_12(Z_3)": "BQ^3_3",
    "A_22(Z_3)": "BQ^3_5",
    # printed as Q^3_2; the computed class is Q^3_3
    "B_2(Z_3)": "Q^3_3",
}

PAIRS = {
    "P1": ("BQ^3_3", "Q^3_1"),
    "P2": ("Q^3_3", "BQ^3_5"),
    "P3": ("BQ^4_3", "Q^4_1"),
    "P4": ("BQ^4_19", "Q^4_1"),
    "P5": ("BQ^4_34", "BQ^4_23"),
    "P6": ("BQ^4_38", "BQ^4_39"),
    "P7": ("BQ^4_41", "BQ^4_39"),
    "P8": ("BQ^4_56", "BQ^4_50"),
    "P9": ("Q^4_6", "BQ^4_50"),
    "P10": ("BQ^4_51", "Q^4_1"),
    "P11": ("BQ^6_10", "BQ^6_1494"),
    "P12": ("BQ^6_22", "BQ^6_1494"),
    "P13": ("BQ^6_49", "BQ^6_230"),
}

# pairs that are virtual but need not be essential
EXTRA_PAIRS = {
    "bigelow-pair": ("BQ^4_3", "BQ^4_9"),
    "theorem53-pair": ("BQ^3_3", "BQ^3_5"),
    "theorem53-essential": ("BQ^3_3", "Q^3_1"),
    "kishino-pair": ("BQ^4_53", "BQ^4_26"),
}

WORDS = {
    "w3.1": "s1 t2 s3 -s2 -s2 -s1 t2 -s3 s2",
    "w3.2": "t1 -s2 t1 -s1 -s1 t2",
    "w4.1": "s1 t1 -s1 s2 s1 t1 -s1 -s2",
    "w4.2": "-s1 -s2 s3 t2 s1 -s4 s3 t2 s3 s4 -s3 -s2",
    "w4.3": "-s1 s2 s3 t2 s1 -s4 s3 t2 s3 s4 -s3 s2",
    "w4.4": "-s1 s2 s3 t2 s1 -s4 s3 -s2 s3 s4 -s3 t2",
    "w4.5": "t1 s2 -s1 t1 s1 s2",
    "w4.6": "-s1 -s2 t3 -s2 s1 -s4 t3 -s2 -s3 s4 -s3 s2",
    "w6.1": "-s1 -s2 -s2 -s2 s1 -s3 -s2 -s2 -s2 s3 t2",
    "K1": "s1 -s2 -s1 t2 s1 s2 -s1 t2",
    "K2": "-s1 -s2 s1 t2 -s1 s2 s1 t2",
    "trefoil": "s1 s1 s1",
    "figure-eight": "s1 -s2 s1 -s2",
}

WELDED_WORDS = ("w3.1", "w3.2", "w4.1", "w4.2", "w4.3", "w4.4", "w4.5", "w4.6", "w6.1")
WELDED_PAIRS = ("P3", "P4", "P11", "P12", "P13")
# printed cells; w6.1 is printed for P3 and P4 only
WELDED_TABLE = {
    "w3.1": (10, 4, 6, 6, 6),
    "w3.2": (10, 16, 6, 6, 6),
    "w4.1": (10, 4, 26, 6, 6),
    "w4.2": (10, 4, 6, 6, 26),
    "w4.3": (4, 4, 26, 26, 6),
    "w4.4": (4, 4, 6, 26, 6),
    "w4.5": (4, 16, 6, 6, 6),
    "w4.6": (4, 4, 6, 26, 26),
    "w6.1": (28, 28, None, None, None),
}
