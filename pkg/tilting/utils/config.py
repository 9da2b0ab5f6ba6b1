import argparse
from dataclasses import dataclass, field
from fractions import Fraction

import bittensor as bt

from ..core.const import COMMANDS, DEFAULT_FORMAT, EVENTS_RETENTION_SIZE, FORMATS, LINKAGE_BOUND, TL_ACTIONS
from ..core.errors import InvalidInput
from ..core.scalars import ScalarContext
from .logging import setup_events_logger


@dataclass
class RunConfig:
    command: str
    ctx: ScalarContext
    action: str = None
    power: int = None
    tensor: list = None
    format: str = DEFAULT_FORMAT
    cache_dir: str = None
    diagrams: list = field(default_factory=list)
    eps: tuple = None
    lam: int = None
    bound: int = LINKAGE_BOUND
    events: object = None
    output: str = None


def add_args(parser):
    """
    Adds the command, context and input arguments to the parser.
    """

    parser.add_argument("command", nargs="?", default=None, help=f"One of {', '.join(COMMANDS)}.")
    parser.add_argument("action", nargs="?", default=None, help=f"tl action: {', '.join(TL_ACTIONS)}.")

    parser.add_argument("--l", type=int, default=None, help="Odd order l >= 3 of the root of unity.")
    parser.add_argument("--generic", action="store_true", default=False, help="Work over Q(v) (the default).")
    parser.add_argument("--q", type=str, default=None, help="Nonzero rational specialization of v.")

    parser.add_argument("--power", type=int, default=None, help="d for T = V^d.")
    parser.add_argument("--tensor", type=str, default=None, help="Comma list a,b,c for T(a)*T(b)*T(c).")
    parser.add_argument("--format", type=str, default=DEFAULT_FORMAT, help=f"One of {', '.join(FORMATS)}.")
    parser.add_argument("--output", type=str, default=None,
                        help="Write the exported document to this file instead of stdout.")
    parser.add_argument("--cache-dir", dest="cache_dir", type=str, default=None,
                        help="Directory of the tilting model cache.")

    parser.add_argument("--tl.diagrams", type=str, default="",
                        help="Diagrams 'd; (a,b) ...' separated by '|', top factor first.")
    parser.add_argument("--tl.eps", type=str, default="", help="Sign vector such as +1,-1,+1.")

    parser.add_argument("--root.lam", type=int, default=None, help="Weight for linkage queries.")
    parser.add_argument("--root.bound", type=int, default=LINKAGE_BOUND, help="Largest weight listed.")

    parser.add_argument("--events.dir", type=str, default="", help="Directory of events.log.")
    parser.add_argument("--events.retention_size", type=int, default=EVENTS_RETENTION_SIZE,
                        help="Events log size before rotation.")
    parser.add_argument("--events.off", action="store_true", default=False,
                        help="If set, no events are written.")


def config(argv=None):
    parser = argparse.ArgumentParser(prog="tiltcell", add_help=False)
    bt.logging.add_args(parser)
    add_args(parser)
    return bt.config(parser, args=argv)


def context_from(config):
    chosen = [name for name, on in (("l", config.l is not None), ("generic", config.generic),
                                    ("q", config.q is not None)) if on]
    if len(chosen) > 1:
        raise InvalidInput(f"choose one of --l, --generic, --q (got {', '.join(chosen)})")
    if config.l is not None:
        return ScalarContext.cyclotomic(config.l)
    if config.q is not None:
        try:
            q = Fraction(config.q)
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidInput(f"--q must be a rational number, got {config.q!r}") from e
        return ScalarContext.rational(q)
    return ScalarContext.generic()


def parse_signs(text):
    """'+1,-1,+1', '+,-,+' or '+-+' as a tuple of +1/-1."""
    if not text:
        return None
    tokens = text.split(",") if "," in text else list(text) if set(text) <= set("+-") else [text]
    try:
        return tuple({"+": 1, "-": -1}.get(t.strip()) or int(t) for t in tokens)
    except ValueError as e:
        raise InvalidInput(f"bad sign vector {text!r}") from e


def check_config(config):
    """Validates the parsed config and returns a RunConfig."""
    bt.logging.check_config(config)

    if config.command not in COMMANDS:
        raise InvalidInput(f"unknown command {config.command!r}; expected one of {', '.join(COMMANDS)}")
    if config.command == "tl" and config.action not in TL_ACTIONS:
        raise InvalidInput(f"unknown tl action {config.action!r}; expected one of {', '.join(TL_ACTIONS)}")
    if config.format not in FORMATS:
        raise InvalidInput(f"unknown format {config.format!r}")
    ctx = context_from(config)

    if config.power is not None and config.power < 0:
        raise InvalidInput(f"--power must be >= 0, got {config.power}")
    tensor = None
    if config.tensor:
        try:
            tensor = [int(x) for x in config.tensor.split(",")]
        except ValueError as e:
            raise InvalidInput(f"bad --tensor list {config.tensor!r}") from e
        if any(x < 0 for x in tensor):
            raise InvalidInput(f"--tensor weights must be >= 0, got {tensor}")

    events = None
    if config.events.dir and not config.events.off:
        events = setup_events_logger(config.events.dir, config.events.retention_size)
        bt.logging.register_primary_logger(events.name)

    return RunConfig(
        command=config.command,
        ctx=ctx,
        action=config.action,
        power=config.power,
        tensor=tensor,
        format=config.format,
        cache_dir=config.cache_dir,
        diagrams=[d for d in config.tl.diagrams.split("|") if d.strip()],
        eps=parse_signs(config.tl.eps),
        lam=config.root.lam,
        bound=config.root.bound,
        events=events,
        output=config.output,
    )
