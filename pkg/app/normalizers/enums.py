# app/normalizers/enums.py

IDEAL_COMMANDS = (
    "depth-function",
    "betti",
    "hilbert",
    "dim",
    "summand",
    "retract",
    "rees-hvector",
    "rees-normal",
    "rees-cm",
    "spread",
    "analyze",
)

COMMANDS = IDEAL_COMMANDS + (
    "degree-selection",
    "explore",
    "graph",
)

OUTPUT_FORMATS = ("text", "json")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RESOURCE = 2
EXIT_INVARIANT = 3
