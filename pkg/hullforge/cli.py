import logging
import sys
import argparse
from pathlib import Path
from typing import Any, Callable, Dict, Final, List, Optional, Tuple

from hullforge.args_processor import ArgsProcessor, EXIT_INPUT_ERROR
from hullforge.codefile import format_code_file, load_code_file
from hullforge.codes import (
    LinearCode, Side, ZeroCode, dual, hull, hull_dimension_via_gramian,
    is_hull_maximal_so_in, min_distance, random_code,
)
from hullforge.config import ConfigLoader, EnumerationBudget
from hullforge.diag import (
    DiagStrategy, diagonalize, diagonalize_maximal_hull, diagonalize_odd,
    pair_diagonal_generators,
)
from hullforge.eaqecc import base_params, extend_euclidean, extend_hermitian, rate_report
from hullforge.errors import BudgetExceeded, DomainRefusal, InputError, VerificationError
from hullforge.gf import make_field
from hullforge.matfq import Form
from hullforge.oracle import (
    enumerate_codewords, format_golden, hull_by_enumeration, maximal_so_by_enumeration,
    min_distance_by_enumeration,
)
from hullforge.report import ReportEnvelope

EXIT_OK: Final = 0
EXIT_REFUSAL: Final = 1
EXIT_VERIFICATION: Final = 3

LOG_FORMAT: Final = "%(levelname)s - %(asctime)s : %(message)s"

logger = logging.getLogger(__name__)

# (result payload, human-readable lines, success)
Outcome = Tuple[Dict[str, Any], List[str], bool]


class HullforgeCLI:

    @staticmethod
    def main():
        """
        Entry point for the hullforge CLI.
        """
        sys.exit(HullforgeCLI.run())

    @staticmethod
    def run(argv: Optional[List[str]] = None) -> int:
        """Parse argv, execute one subcommand and return the exit status."""
        parser = ArgsProcessor.generate_argument_parser()
        args: argparse.Namespace = parser.parse_args(argv)

        if getattr(args, 'verbose', False):
            logging.basicConfig(level=logging.DEBUG, format=LOG_FORMAT)

        final_config = ArgsProcessor.load_configuration(args)

        if not getattr(args, 'verbose', False) and final_config.get('verbose', False):
            logging.basicConfig(level=logging.DEBUG, format=LOG_FORMAT)
        else:
            logging.basicConfig(level=logging.INFO, format=LOG_FORMAT)

        logger.debug(f"final_config in cli: {final_config}")

        if final_config.get('generate_sample_config'):
            ConfigLoader.generate_sample_config(str(final_config['generate_sample_config']))
            logger.info(f"Saved config to {final_config['generate_sample_config']}")
            return EXIT_OK

        status = HullforgeCLI.run_command(final_config, argv)

        if status == EXIT_OK and final_config.get('save_config'):
            ConfigLoader.save_config(final_config, str(final_config['save_config']))
        return status

    @staticmethod
    def run_command(final_config: Dict[str, Any], argv: Optional[List[str]] = None) -> int:
        """
        Execute the configured subcommand and print its result.

        Args:
            final_config: Dictionary containing all configuration parameters
            argv: The original arguments, recorded in golden files
        """
        command = final_config['command']
        handlers: Dict[str, Callable[[Dict[str, Any]], Tuple[Any, Outcome]]] = {
            "field-info": HullforgeCLI.field_info,
            "hull": HullforgeCLI.hull,
            "diag": HullforgeCLI.diag,
            "mindist": HullforgeCLI.mindist,
            "eaqecc-base": HullforgeCLI.eaqecc_base,
            "eaqecc-extend": HullforgeCLI.eaqecc_extend,
            "verify": HullforgeCLI.verify,
            "oracle-dump": HullforgeCLI.oracle_dump,
            "random-code": HullforgeCLI.random_code,
        }
        recorded = " ".join(["hullforge"] + list(argv if argv is not None else sys.argv[1:]))
        final_config = {**final_config, 'invocation': recorded}

        try:
            (spec, source_text), (result, lines, ok) = handlers[command](final_config)
        except VerificationError as e:
            logger.error(f"Verification failed: {e}")
            return EXIT_VERIFICATION
        except (DomainRefusal, BudgetExceeded) as e:
            logger.error(f"Refused: {e}")
            return EXIT_REFUSAL
        except FileNotFoundError as e:
            logger.error(f"File not found: {e}")
            return EXIT_INPUT_ERROR
        except (InputError, ValueError) as e:
            logger.error(f"Invalid input: {e}")
            return EXIT_INPUT_ERROR
        except Exception as e:
            logger.exception(f"An error occurred while running {command}: {str(e)}")
            return EXIT_VERIFICATION

        if final_config.get('json', False):
            print(ReportEnvelope.build(command, spec, result, source_text).to_json())
        elif lines:
            print("\n".join(lines))

        if not ok:
            logger.error(f"{command} reported failed checks")
            return EXIT_VERIFICATION
        return EXIT_OK

    # -- helpers -----------------------------------------------------------

    @staticmethod
    def _budget(final_config: Dict[str, Any]) -> EnumerationBudget:
        return EnumerationBudget(final_config['budget'])

    @staticmethod
    def _load(final_config: Dict[str, Any]) -> Tuple[LinearCode, str]:
        return load_code_file(final_config['code_file'])

    @staticmethod
    def _write_or_print(text: str, output: Optional[str]) -> List[str]:
        if output:
            Path(output).write_text(text, encoding="utf-8")
            logger.info(f"Wrote {output}")
            return []
        return text.rstrip("\n").splitlines()

    # -- subcommands -------------------------------------------------------

    @staticmethod
    def field_info(final_config: Dict[str, Any]):
        spec = make_field(final_config['p'], final_config['m'])
        lines = [
            str(spec),
            f"  characteristic : {spec.p}",
            f"  degree         : {spec.m}",
            f"  order          : {spec.q}",
            f"  subfield order : {spec.subfield_order if spec.has_conjugation else '-'}",
        ]
        return (spec, None), (spec.describe(), lines, True)

    @staticmethod
    def hull(final_config: Dict[str, Any]):
        C, text = HullforgeCLI._load(final_config)
        report = hull(C, final_config['form'])
        lines = [
            f"code            : {C}",
            f"form            : {report.form.value}",
            f"hull dimension  : {report.ell}",
            f"rank(G G*)      : {report.gramian_rank_g}",
            f"rank(H H*)      : {report.gramian_rank_h}",
            f"rank law holds  : {report.consistent}",
        ]
        lines += ["hull generator  :"] + [
            "  " + " ".join(str(x) for x in report.hull.gen.row(i)) for i in range(report.hull.k)]
        return (C.spec, text), (report.to_dict(), lines, report.consistent)

    @staticmethod
    def diag(final_config: Dict[str, Any]):
        C, text = HullforgeCLI._load(final_config)
        result = diagonalize(
            C,
            final_config['form'],
            final_config.get('method', DiagStrategy.AUTO.value),
            final_config.get('side', Side.CODE.value),
            HullforgeCLI._budget(final_config),
        )
        payload = result.to_dict()
        lines = [
            f"code      : {C}",
            f"method    : {payload['method']}",
            f"diagonal  : {' '.join(str(a) for a in payload['diagonal'])}",
            f"nonzeros  : {payload['nonzero_count']}",
        ]
        for key in ("new_gen", "g1", "g2"):
            if key in payload:
                lines.append(f"{key}:")
                lines += ["  " + " ".join(str(x) for x in row) for row in payload[key]]
        return (C.spec, text), (payload, lines, True)

    @staticmethod
    def mindist(final_config: Dict[str, Any]):
        C, text = HullforgeCLI._load(final_config)
        d = min_distance(C, HullforgeCLI._budget(final_config),
                         final_config.get('show_progress', False))
        return (C.spec, text), ({"n": C.n, "k": C.k, "d": d}, [f"{C}: d = {d}"], True)

    @staticmethod
    def eaqecc_base(final_config: Dict[str, Any]):
        C, text = HullforgeCLI._load(final_config)
        form = final_config['form']
        ell = hull(C, form).ell
        first, second = base_params(C, form, HullforgeCLI._budget(final_config),
                                    final_config.get('show_progress', False))
        rates = rate_report(first, C.n, C.k, ell, 0)
        payload = {
            "ell": ell,
            "records": [first.to_dict(), second.to_dict()],
            "rate_report": rates.to_dict(),
        }
        lines = [
            f"code       : {C}, hull dimension {ell}",
            f"record     : {first}  ({first.provenance.value})",
            f"dual side  : {second}  ({second.provenance.value})",
            f"rate       : {rates.rate}",
            f"net rate   : {rates.net_rate}",
        ]
        return (C.spec, text), (payload, lines, rates.record_consistent)

    @staticmethod
    def eaqecc_extend(final_config: Dict[str, Any]):
        C, text = HullforgeCLI._load(final_config)
        form = Form(final_config['form'])
        r = final_config.get('r', 0)
        extend = extend_hermitian if form is Form.HERMITIAN else extend_euclidean
        certificate, record = extend(C, r, HullforgeCLI._budget(final_config),
                                     final_config.get('show_progress', False))
        rates = rate_report(record, C.n, C.k, certificate.ell, r)
        payload = {
            "certificate": certificate.to_dict(),
            "record": record.to_dict(),
            "rate_report": rates.to_dict(),
        }
        lines = [
            f"code           : {C}, hull dimension {certificate.ell}",
            f"extended       : {certificate.extended} by r = {r}",
            f"alphas         : {' '.join(str(a) for a in certificate.alphas)}",
            f"hull preserved : {certificate.hull_preserved}",
            f"d, d'          : {certificate.d}, {certificate.d_prime}",
            f"record         : {record}",
            f"net rate       : {rates.net_rate} (positive: {rates.net_rate_positive})",
            f"4k >= 3n + r   : {rates.condition_holds}",
        ]
        ok = certificate.distance_sandwich_holds is not False
        return (C.spec, text), (payload, lines, ok)

    @staticmethod
    def verify(final_config: Dict[str, Any]):
        C, text = HullforgeCLI._load(final_config)
        budget = HullforgeCLI._budget(final_config)
        forms = [Form.EUCLIDEAN] + ([Form.HERMITIAN] if C.spec.has_conjugation else [])
        checks: List[Dict[str, Any]] = []

        def check(name: str, label: str, fn: Callable[[], Tuple[bool, str]]) -> None:
            try:
                passed, detail = fn()
            except BudgetExceeded as e:
                passed, detail = None, f"skipped: {e}"
            except (VerificationError, DomainRefusal) as e:
                passed, detail = False, str(e)
            checks.append({"name": name, "form": label, "passed": passed, "detail": detail})

        def distance_check():
            d_main = min_distance(C, budget)
            d_oracle = min_distance_by_enumeration(C, budget)
            return d_main == d_oracle, f"main {d_main}, oracle {d_oracle}"

        check("min-distance", "-", distance_check)

        for form in forms:
            report = hull(C, form)
            ell = report.ell

            def hull_check(form=form, report=report):
                _, oracle_ell = hull_by_enumeration(C, form, budget)
                gram_ell = hull_dimension_via_gramian(C, form)
                ok = report.consistent and report.ell == oracle_ell == gram_ell
                return ok, f"hull {report.ell}, gramian {gram_ell}, oracle {oracle_ell}"

            def maximal_check(form=form):
                main = is_hull_maximal_so_in(C, form, Side.CODE, budget)
                oracle = maximal_so_by_enumeration(C, form, budget)
                return main == oracle, f"main {main}, oracle {oracle}"

            def diag_check(form=form, ell=ell):
                if C.spec.is_odd:
                    result = diagonalize_odd(C, form)
                elif is_hull_maximal_so_in(C, form, Side.CODE, budget):
                    result = diagonalize_maximal_hull(C, form, budget)
                else:
                    return True, "no diagonalization: even characteristic, hull not maximal"
                return result.nonzero_count == C.k - ell, \
                    f"{result.method.value}: {result.nonzero_count} nonzeros, k - ell = {C.k - ell}"

            def pair_check(form=form, ell=ell):
                pair = pair_diagonal_generators(C, form)
                return pair.nonzero_count == C.k - ell, \
                    f"cross-Gramian rank {pair.nonzero_count}, k - ell = {C.k - ell}"

            def dual_check(form=form, ell=ell):
                D = dual(C, form)
                if isinstance(D, ZeroCode):
                    return ell == 0, "dual is zero"
                dual_ell = hull(D, form).ell
                return dual_ell == ell, f"dual hull {dual_ell}, hull {ell}"

            check("hull", form.value, hull_check)
            check("maximal-hull", form.value, maximal_check)
            check("diagonalization", form.value, diag_check)
            check("pair-diagonalization", form.value, pair_check)
            check("dual-hull", form.value, dual_check)

        ok = all(c["passed"] is not False for c in checks)
        lines = [f"verify {C}"]
        for c in checks:
            mark = "PASS" if c["passed"] else ("SKIP" if c["passed"] is None else "FAIL")
            lines.append(f"  [{mark}] {c['name']:<22} {c['form']:<10} {c['detail']}")
        lines.append("all checks passed" if ok else "some checks FAILED")
        logger.info(f"verification of {C}: {'passed' if ok else 'failed'}")
        return (C.spec, text), ({"checks": checks, "passed": ok}, lines, ok)

    @staticmethod
    def oracle_dump(final_config: Dict[str, Any]):
        C, text = HullforgeCLI._load(final_config)
        budget = HullforgeCLI._budget(final_config)
        if final_config.get('what', 'codewords') == 'hull':
            found, _ = hull_by_enumeration(C, final_config['form'], budget)
            words = sorted(found)
        else:
            words = list(enumerate_codewords(C, budget))
        golden = format_golden(C.spec, C.n, words, final_config['invocation'])
        lines = HullforgeCLI._write_or_print(golden, final_config.get('output'))
        payload = {"n": C.n, "words": [list(w) for w in words]}
        return (C.spec, text), (payload, lines, True)

    @staticmethod
    def random_code(final_config: Dict[str, Any]):
        spec = make_field(final_config['p'], final_config['m'])
        C = random_code(spec, final_config['n'], final_config['k'], final_config.get('seed'))
        body = format_code_file(C, comment=f"produced by: {final_config['invocation']}")
        lines = HullforgeCLI._write_or_print(body, final_config.get('output'))
        payload = {"n": C.n, "k": C.k, "gen": C.gen.tolist()}
        return (spec, None), (payload, lines, True)


if __name__ == "__main__":
    HullforgeCLI.main()
