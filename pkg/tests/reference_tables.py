"""Published cohomology tables for Gamma_{1,s} and Gamma_{2,s}, transcribed by hand.

Each row lists H^0, H^1, ... up to the last column printed for that s.
Modules are in the text notation of ``parse_module_sum``; ``"0"`` is zero.
"""

RANK_ONE_MODULES = {
    0: ["()"],
    1: ["(1)"],
    2: ["(2)", "0"],
    3: ["(3)", "0", "(1^3)"],
    4: ["(4)", "0", "(2,1^2)", "0"],
    5: ["(5)", "0", "(3,1^2)", "0", "(1^5)"],
    6: ["(6)", "0", "(4,1^2)", "0", "(2,1^4)", "0"],
    7: ["(7)", "0", "(5,1^2)", "0", "(3,1^4)", "0", "(1^7)"],
    8: ["(8)", "0", "(6,1^2)", "0", "(4,1^4)", "0", "(2,1^6)", "0"],
}

RANK_ONE_DIMS = {
    0: [1],
    1: [1],
    2: [1, 0],
    3: [1, 0, 1],
    4: [1, 0, 3, 0],
    5: [1, 0, 6, 0, 1],
    6: [1, 0, 10, 0, 5, 0],
    7: [1, 0, 15, 0, 15, 0, 1],
    8: [1, 0, 21, 0, 35, 0, 7, 0],
}

# the H^6 entry for s = 8 is blank in print; it lies inside the vcd and is 0
RANK_TWO_MODULES = {
    0: ["()", "0"],
    1: ["(1)", "0", "0"],
    2: ["(2)", "0", "0", "0"],
    3: ["(3)", "0", "0", "0", "0"],
    4: ["(4)", "0", "0", "0", "(2^2)", "(2,1^2)"],
    5: ["(5)", "0", "0", "0", "(3,2) + (2^2,1)", "(3,1^2) + (2^2,1) + (2,1^3)", "0"],
    6: [
        "(6)", "0", "0", "0",
        "(4,2) + (3,2,1) + (2^3)",
        "(4,1^2) + (3,2,1) + (3,1^3) + (2^2,1^2)",
        "0",
        "(2,1^4)",
    ],
    7: [
        "(7)", "0", "0", "0",
        "(5,2) + (4,2,1) + (3,2^2)",
        "(5,1^2) + (4,2,1) + (4,1^3) + (3,2,1^2)",
        "0",
        "(3,1^4) + (2^2,1^3) + (2,1^5)",
        "0",
    ],
    8: [
        "(8)", "0", "0", "0",
        "(6,2) + (5,2,1) + (4,2^2)",
        "(6,1^2) + (5,2,1) + (5,1^3) + (4,2,1^2)",
        "0",
        "(4,1^4) + (3,2,1^3) + (3,1^5) + (2^2,1^4)",
        "(2^4)",
        "(2,1^6) + (2^3,1^2)",
    ],
    9: [
        "(9)", "0", "0", "0",
        "(7,2) + (6,2,1) + (5,2^2)",
        "(7,1^2) + (6,2,1) + (6,1^3) + (5,2,1^2)",
        "0",
        "(5,1^4) + (4,2,1^3) + (4,1^5) + (3,2,1^4)",
        "(3,2^3) + (2^4,1)",
        "(3,1^6) + (2^2,1^5) + (2,1^7) + (3,2^2,1^2) + (2^4,1) + (2^3,1^3)",
        "0",
    ],
    10: [
        "(10)", "0", "0", "0",
        "(8,2) + (7,2,1) + (6,2^2)",
        "(8,1^2) + (7,2,1) + (7,1^3) + (6,2,1^2)",
        "0",
        "(6,1^4) + (5,2,1^3) + (5,1^5) + (4,2,1^4)",
        "(4,2^3) + (3,2^3,1) + (2^5)",
        "(4,1^6) + (3,2,1^5) + (3,1^7) + (2^2,1^6) + (4,2^2,1^2) + (2^4,1^2) + (3,2^2,1^3) + (3,2^3,1)",
        "0",
    ],
}

RANK_TWO_DIMS = {
    0: [1, 0],
    1: [1, 0, 0],
    2: [1, 0, 0, 0],
    3: [1, 0, 0, 0, 0],
    4: [1, 0, 0, 0, 2, 3],
    5: [1, 0, 0, 0, 10, 15, 0],
    6: [1, 0, 0, 0, 30, 45, 0, 5],
    7: [1, 0, 0, 0, 70, 105, 0, 35, 0],
    8: [1, 0, 0, 0, 140, 210, 0, 140, 14, 35],
    9: [1, 0, 0, 0, 252, 378, 0, 420, 126, 315, 0],
    10: [1, 0, 0, 0, 420, 630, 0, 1050, 630, 1575, 0],
}
