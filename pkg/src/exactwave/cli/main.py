import argparse
import json
import logging
import os
import sys

from exactwave import __version__
from exactwave.base.errors import (BlowUpError, ConfigError, ConstructionError, ContractError,
                                   DomainError)
from exactwave.cli.commands import COMMANDS
from exactwave.cli.config import SCENE_SCHEMA, SceneConfig
from exactwave.cli.output import atomic_write, write_outputs

logger = logging.getLogger("exactwave")

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DOMAIN = 3
EXIT_TOLERANCE = 4
EXIT_BLOWUP = 5


def build_parser():
    parser = argparse.ArgumentParser(
        prog="exactwave",
        description="exact solutions of u_tt = K^2(x) u_xx and their numerical verification")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func in COMMANDS.items():
        p = sub.add_parser(name, help=(func.__doc__ or "").strip().splitlines()[0])
        p.add_argument("--config", required=True, help="scene file (JSON)")
        p.add_argument("--out", default=".", help="output directory")
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--levels", type=int, default=3, help="refinement levels")
        p.add_argument("--seed", type=int, default=None, help="seed of the randomized sweep")
        p.add_argument("-v", "--verbose", action="store_true")

    p = sub.add_parser("schema", help="the JSON schema of scene files")
    p.add_argument("--out", default=None, help="directory for scene.schema.json")
    p.add_argument("-v", "--verbose", action="store_true")
    return parser


def _run(options):
    if options.command == "schema":
        text = json.dumps(SCENE_SCHEMA, indent=2) + "\n"
        if options.out is None:
            sys.stdout.write(text)
        else:
            atomic_write(os.path.join(options.out, "scene.schema.json"), text)
        return EXIT_OK

    config = SceneConfig.from_file(options.config)
    result = COMMANDS[options.command](config, options)
    name = config.prefix or result.name
    paths = write_outputs(options.out, name, result.header, result.columns,
                          result.summary, fmt=options.format)
    for path in paths:
        logger.info("wrote %s", path)
    if not result.passed:
        logger.error("%s failed its tolerance check, see %s", options.command, paths[-1])
        return EXIT_TOLERANCE
    return EXIT_OK


def main(argv=None):
    """ Entry point of the exactwave command.

    Returns
    -------
    int
        0 on success, 2 for an invalid scene, 3 for a domain or
        construction error, 4 for a failed tolerance check and 5 when
        a numerical solve blows up
    """
    options = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if options.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return _run(options)
    except ConfigError as err:
        logger.error("invalid scene: %s", err)
        return EXIT_CONFIG
    except BlowUpError as err:
        logger.error("blow-up: %s", err)
        return EXIT_BLOWUP
    except (DomainError, ContractError, ConstructionError) as err:
        logger.error("%s: %s", type(err).__name__, err)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
