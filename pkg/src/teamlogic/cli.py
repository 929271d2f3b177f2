"""Command-line front end.

Exit status: 0 when the answer is true (or the command succeeded), 1 when
the answer is false, 2 on usage, parse or limit errors.

Default limits can be overridden with the environment variables
``TEAMLOGIC_MAX_VARS`` (brute-force variables) and
``TEAMLOGIC_MAX_SPLIT`` (largest team searched for covers).
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from . import __version__
from .errors import ParseError, TeamLogicError
from .evaluator import EvalConfig, satisfying_teams
from .formula import Formula, to_text
from .fragment import classify, describe
from .parser import parse
from .reductions import parse_qbf, tqbf_to_mc
from .solvers import MC, SAT, VAL, decide
from .team import ALL_TEAMS_LIMIT, Team, read_team
from .transforms import PASSES

HUMAN, MACHINE = "human", "machine"


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    formula_text: str
    team_path: str | None = None
    max_vars: int = ALL_TEAMS_LIMIT
    max_split: int = 16
    output: str = HUMAN
    translate_pass: str | None = None

    def __post_init__(self):
        if self.max_vars <= 0 or self.max_split <= 0:
            raise ValueError("limits must be positive")


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


def _team_inline(team: Team) -> str:
    return f"{','.join(team.domain)}:{','.join(team.rows())}"


def _team_block(team: Team) -> str:
    return team.to_text().rstrip("\n")


def run(config: RunConfig, out: TextIO = sys.stdout) -> int:
    """Execute one query and write its report to ``out``; returns the exit status."""
    machine = config.output == MACHINE
    eval_config = EvalConfig(max_split_size=config.max_split)
    cmd = config.subcommand

    if cmd == "reduce-tqbf":
        q = parse_qbf(config.formula_text)
        inst = tqbf_to_mc(q)
        if machine:
            print(f"team={_team_inline(inst.team)}\tformula={to_text(inst.formula)}", file=out)
        else:
            print(_team_block(inst.team), file=out)
            print(to_text(inst.formula), file=out)
        return 0

    f = parse(config.formula_text)

    if cmd == "classify":
        frag = classify(f)
        if machine:
            note = frag.complexity_note
            print(f"label={frag.label}\tsat={note.sat_class}\tval={note.val_class}\tmc={note.mc_class}", file=out)
        else:
            print(describe(f), file=out)
        return 0

    if cmd == "translate":
        g = PASSES[config.translate_pass](f)
        print(to_text(g), file=out)
        return 0

    if cmd == "models":
        teams = satisfying_teams(f, config=eval_config, limit=config.max_vars)
        if machine:
            print("models=" + ";".join(",".join(t.rows()) for t in teams), file=out)
        else:
            print(f"{len(teams)} satisfying team(s) over {' '.join(teams[0].domain if teams else ())}".rstrip(),
                  file=out)
            for t in teams:
                print(str(t), file=out)
        return 0

    if cmd == MC:
        team = read_team(config.team_path)
        verdict = decide(f, MC, team, config=eval_config)
        print("true" if verdict.answer else "false", file=out)
        return 0 if verdict.answer else 1

    verdict = decide(f, cmd, limit=config.max_vars, config=eval_config)
    if machine:
        witness = _team_inline(verdict.witness) if verdict.witness else "-"
        print(f"{cmd}\t{str(verdict.answer).lower()}\t{verdict.method}\t{witness}", file=out)
    else:
        if cmd == SAT:
            word = "satisfiable" if verdict.answer else "unsatisfiable"
        else:
            word = "valid" if verdict.answer else "not valid"
        print(f"{word} (method: {verdict.method})", file=out)
        if verdict.witness is not None:
            label = "witness" if cmd == SAT else "counterexample"
            print(f"# {label}", file=out)
            print(_team_block(verdict.witness), file=out)
    return 0 if verdict.answer else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="teamlogic",
        description="Model checking, satisfiability, validity and translations for propositional team logics.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("formula", nargs="?", help="formula text (or use --file)")
    common.add_argument("-f", "--file", help="read the formula from a file")
    common.add_argument("--machine", action="store_const", const=MACHINE, dest="output", default=HUMAN,
                        help="one tab-separated result line")
    common.add_argument("--max-vars", type=int, default=None, help="brute-force variable limit")
    common.add_argument("--max-split", type=int, default=None, help="largest team searched for covers")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    mc = sub.add_parser("mc", parents=[common], help="model check a formula on a team file")
    mc.add_argument("--team", required=True, help="team file")
    sub.add_parser("sat", parents=[common], help="decide satisfiability")
    sub.add_parser("val", parents=[common], help="decide validity")
    tr = sub.add_parser("translate", parents=[common], help="apply a translation pass")
    tr.add_argument("--pass", dest="translate_pass", required=True, choices=sorted(PASSES))
    sub.add_parser("reduce-tqbf", parents=[common], help="reduce a QBF to a model-checking instance")
    sub.add_parser("models", parents=[common], help="list all satisfying teams")
    sub.add_parser("classify", parents=[common], help="fragment and complexity annotations")
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if (args.formula is None) == (args.file is None):
        print("error: give exactly one of FORMULA or --file", file=err)
        return 2
    try:
        if args.file is not None:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = args.formula
        config = RunConfig(
            subcommand=args.subcommand,
            formula_text=text,
            team_path=getattr(args, "team", None),
            max_vars=args.max_vars if args.max_vars is not None else _env_int("TEAMLOGIC_MAX_VARS", ALL_TEAMS_LIMIT),
            max_split=args.max_split if args.max_split is not None else _env_int("TEAMLOGIC_MAX_SPLIT", 16),
            output=args.output,
            translate_pass=getattr(args, "translate_pass", None),
        )
        return run(config, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return 2
    except (TeamLogicError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
