import argparse
import json
import logging
import sys
import time

from .Config import Config
from .OrbitaError import OrbitaError
from .ResultTable import Format
from .Command import _common

__import__('Command', globals(), level=1, fromlist=['*'])
# ^^^ from .Command import *    , but without polluting the namespace
from .Command._registry import command_registry


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Branching laws of discrete series, in exact arithmetic')
    parser.add_argument('--logfile', help="Log to the given file", type=str)
    parser.add_argument('--debug', help="Enable debug logging", action='store_true')
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True
    for name in sorted(command_registry.keys()):
        cls = command_registry[name]
        sub = subparsers.add_parser(name, help=cls.help)
        _common.add_shared_arguments(sub)
        cls.add_arguments(sub)
    return parser


def setup_logging(args):
    logging.getLogger(None).setLevel(logging.DEBUG if args.debug else logging.INFO)
    logging.Formatter.converter = time.gmtime

    if args.logfile:
        log_file_handler = logging.FileHandler(args.logfile)
    else:
        log_file_handler = logging.StreamHandler(sys.stderr)
    log_file_handler.setFormatter(logging.Formatter(
        fmt="%(asctime)sZ [%(name)s %(levelname)s] %(message)s"
    ))
    logging.getLogger(None).addHandler(log_file_handler)
    return log_file_handler


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = setup_logging(args)
    logger = logging.getLogger(__name__)

    try:
        command = command_registry[args.command]
        logger.debug("running {}".format(args.command))
        config = Config.load(args.config) if args.config is not None else None
        table = command.run(args, config)
        output = table.render(Format(args.format))
    except OrbitaError as e:
        logger.error("{}: {}".format(type(e).__name__, e))
        sys.stderr.write(json.dumps(e.to_json_able(), ensure_ascii=False) + "\n")
        return e.exit_code
    finally:
        logging.getLogger(None).removeHandler(handler)

    sys.stdout.write(output)
    return table.exit_code


if __name__ == '__main__':
    sys.exit(main())
