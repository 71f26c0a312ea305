import argparse
import sys
from typing import Final, Optional, Dict, Any

from hullforge import __version__
from hullforge.config import (
    BUDGET_ENV_VAR, DEFAULT_BUDGET, ConfigLoader, EnumerationBudget, HullforgeConfig,
)
from hullforge.diag import DiagStrategy
from hullforge.errors import InputError
from hullforge.codes import Side
from hullforge.matfq import Form

import logging
logger = logging.getLogger(__name__)

DEFAULT_FORM: Final = Form.EUCLIDEAN.value
DEFAULT_R: Final = 0
DEFAULT_VERBOSE: Final = False
DEFAULT_JSON: Final = False
DEFAULT_SHOW_PROGRESS: Final = False
DEFAULT_METHOD: Final = DiagStrategy.AUTO.value
DEFAULT_SIDE: Final = Side.CODE.value

EXIT_INPUT_ERROR: Final = 2

COMMANDS: Final = (
    "field-info", "hull", "diag", "mindist", "eaqecc-base", "eaqecc-extend",
    "verify", "oracle-dump", "random-code",
)


class TrackingAction(argparse.Action):
    """Custom action that tracks which arguments were explicitly provided."""

    def __call__(self, parser, namespace, values, option_string=None):
        if not hasattr(namespace, '_explicitly_provided'):
            namespace._explicitly_provided = set()
        namespace._explicitly_provided.add(self.dest)
        setattr(namespace, self.dest, values)


class TrackingBooleanAction(argparse.BooleanOptionalAction):
    """Custom boolean action that tracks explicit provision."""

    def __call__(self, parser, namespace, values, option_string=None):
        if not hasattr(namespace, '_explicitly_provided'):
            namespace._explicitly_provided = set()
        namespace._explicitly_provided.add(self.dest)
        super().__call__(parser, namespace, values, option_string)


class ArgsProcessor:
    @staticmethod
    def __common_options() -> argparse.ArgumentParser:
        """Options shared by every subcommand."""
        common = argparse.ArgumentParser(add_help=False)

        common.add_argument(
            "--form",
            action=TrackingAction,
            choices=[f.value for f in Form],
            default=DEFAULT_FORM,
            help=f"Inner product used for duals and hulls, default=[{DEFAULT_FORM}]"
        )

        common.add_argument(
            "--budget",
            action=TrackingAction,
            type=int,
            default=DEFAULT_BUDGET,
            help=f"Largest number of codewords to enumerate (also {BUDGET_ENV_VAR}), "
                 f"default=[{DEFAULT_BUDGET}]"
        )

        common.add_argument(
            "--seed",
            action=TrackingAction,
            type=int,
            help="Seed for random code generation"
        )

        common.add_argument(
            "--json",
            action=TrackingBooleanAction,
            default=DEFAULT_JSON,
            help=f"Print a JSON report instead of a table, default=[{DEFAULT_JSON}]"
        )

        common.add_argument(
            "-v", "--verbose",
            action=TrackingBooleanAction,
            default=DEFAULT_VERBOSE,
            help=f"Increase output Verbosity, default=[{DEFAULT_VERBOSE}]"
        )

        common.add_argument(
            "--show-progress",
            action=TrackingBooleanAction,
            default=DEFAULT_SHOW_PROGRESS,
            help=f"Show progress bars during enumeration, default=[{DEFAULT_SHOW_PROGRESS}]"
        )

        common.add_argument(
            "--save-config",
            type=str,
            help="Save Working Configuration to file at specified path"
        )
        return common

    @staticmethod
    def generate_argument_parser() -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="hullforge",
            description="Hulls of linear codes over finite fields, Gramian diagonalization "
                        "and entanglement-assisted quantum code parameters."
        )

        parser.add_argument(
            "--version",
            action="version",
            version=f"%(prog)s {__version__}"
        )

        parser.add_argument(
            "--config-file",
            type=str,
            help="Path to configuration file (YAML or JSON)"
        )

        parser.add_argument(
            "--generate-sample-config",
            type=str,
            help="Generate sample configuration file at specified path"
        )

        common = ArgsProcessor.__common_options()
        sub = parser.add_subparsers(dest="command", metavar="COMMAND")

        field_info = sub.add_parser("field-info", parents=[common],
                                    help="Describe GF(p^m) and its modulus")
        field_info.add_argument("p", type=int, help="Characteristic")
        field_info.add_argument("m", type=int, help="Extension degree")

        for name, text in (
            ("hull", "Hull dimension and Gramian ranks"),
            ("mindist", "Exact minimum distance by enumeration"),
            ("eaqecc-base", "EAQECC parameters of the code and its dual"),
            ("verify", "Cross-check every computation against brute force"),
        ):
            cmd = sub.add_parser(name, parents=[common], help=text)
            cmd.add_argument("code_file", type=str, help="Path to a code file")

        diag = sub.add_parser("diag", parents=[common], help="Diagonalize the Gramian")
        diag.add_argument("code_file", type=str, help="Path to a code file")
        diag.add_argument(
            "--method",
            action=TrackingAction,
            choices=[s.value for s in DiagStrategy],
            default=DEFAULT_METHOD,
            help=f"Diagonalization strategy, default=[{DEFAULT_METHOD}]"
        )
        diag.add_argument(
            "--side",
            action=TrackingAction,
            choices=[s.value for s in Side],
            default=DEFAULT_SIDE,
            help=f"Diagonalize the code or its dual, default=[{DEFAULT_SIDE}]"
        )

        extend = sub.add_parser("eaqecc-extend", parents=[common],
                                help="Extend the code by r coordinates keeping its hull")
        extend.add_argument("code_file", type=str, help="Path to a code file")
        extend.add_argument(
            "--r",
            action=TrackingAction,
            type=int,
            default=DEFAULT_R,
            help=f"Number of appended coordinates, default=[{DEFAULT_R}]"
        )

        dump = sub.add_parser("oracle-dump", parents=[common],
                              help="Write a golden file of codewords or hull codewords")
        dump.add_argument("code_file", type=str, help="Path to a code file")
        dump.add_argument("--what", choices=["codewords", "hull"], default="codewords",
                          help="What to enumerate, default=[codewords]")
        dump.add_argument("-o", "--output", type=str, help="Golden file to write (default stdout)")

        rand = sub.add_parser("random-code", parents=[common], help="Write a random code file")
        for name in ("p", "m", "n", "k"):
            rand.add_argument(name, type=int)
        rand.add_argument("-o", "--output", type=str, help="Code file to write (default stdout)")

        return parser

    @staticmethod
    def __merge_config_and_args(
        config: Optional[HullforgeConfig],
        args: argparse.Namespace
    ) -> Dict[str, Any]:
        """Merge configuration file with CLI arguments (CLI > env > file > defaults)."""

        final_config = {}

        if config:
            final_config.update(config.to_dict())

        logger.debug(f'loaded from conf file: {final_config}')

        explicitly_provided = getattr(args, '_explicitly_provided', set())

        logger.debug(f'explicitly_provided in args: {explicitly_provided}')

        all_args = dict(vars(args))
        all_args.pop('_explicitly_provided', None)

        for key, value in all_args.items():
            if (key in explicitly_provided or key not in final_config) and value is not None:
                final_config[key] = value
                logger.debug(f'Adding/overriding arg: {key} = {value}')

        if 'budget' not in explicitly_provided:
            env_budget = EnumerationBudget.from_env(final_config.get('budget', DEFAULT_BUDGET))
            final_config['budget'] = env_budget.max_codewords

        logger.debug(f"final_config: {final_config}")

        return final_config

    @staticmethod
    def load_configuration(args: argparse.Namespace) -> Dict[str, Any]:
        config = None
        if args.config_file:
            try:
                config = ConfigLoader.load_config(args.config_file)
                logger.info(f"Loaded configuration from: {args.config_file}")
            except (FileNotFoundError, ValueError, TypeError) as e:
                logger.error(f"Error in loading configuration file: {e}")
                sys.exit(EXIT_INPUT_ERROR)

        try:
            final_config = ArgsProcessor.__merge_config_and_args(config, args)
        except InputError as e:
            logger.error(f"Invalid configuration: {e}")
            sys.exit(EXIT_INPUT_ERROR)

        ArgsProcessor.__validate_configuration(final_config)

        return final_config

    @staticmethod
    def __validate_configuration(final_config: Dict[str, Any]) -> None:

        if final_config.get('generate_sample_config'):
            return

        if not final_config.get('command'):
            logger.error(f"A command is required: one of {', '.join(COMMANDS)}")
            sys.exit(EXIT_INPUT_ERROR)

        budget = final_config.get('budget')
        if isinstance(budget, bool) or not isinstance(budget, int) or budget <= 0:
            logger.error(f"Budget must be a positive integer, got {budget!r}")
            sys.exit(EXIT_INPUT_ERROR)

        if final_config.get('form') not in [f.value for f in Form]:
            logger.error(f"Unknown form {final_config.get('form')!r}")
            sys.exit(EXIT_INPUT_ERROR)

        if final_config.get('method', DEFAULT_METHOD) not in [s.value for s in DiagStrategy]:
            logger.error(f"Unknown diagonalization method {final_config.get('method', DEFAULT_METHOD)!r}")
            sys.exit(EXIT_INPUT_ERROR)

        if final_config.get('side', DEFAULT_SIDE) not in [s.value for s in Side]:
            logger.error(f"Unknown side {final_config.get('side', DEFAULT_SIDE)!r}")
            sys.exit(EXIT_INPUT_ERROR)

        r = final_config.get('r', DEFAULT_R)
        if isinstance(r, bool) or not isinstance(r, int) or r < 0:
            logger.error(f"r must be a non-negative integer, got {r!r}")
            sys.exit(EXIT_INPUT_ERROR)
