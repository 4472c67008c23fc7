"""
irlfrac CLI module.

This module provides the `irlfrac` command line. It includes:

- RunConfig: The validated configuration of one invocation, with a canonical string form.
- eval: One row per x of an incomplete (or classical) operator value.
- table: Long-format grids sweeping either the order or the cut ratio.
- verify: Runs verification suites and streams their reports.

Exit codes: 0 on success, 1 when a verification report has an unexpected polarity, 2 on a
configuration error or an unwritable output file, 3 on a numerical failure.
"""

import argparse, csv, json, logging, math, os, shlex, sys
from dataclasses import dataclass
import numpy as np
from irlfrac.exceptions import IRLFracError, ConfigError
from irlfrac.functions import constant, power, exponential, sine, power2
from irlfrac.manager import VerificationManager
from irlfrac.operators import Side, Form, EvalRequest, classical_rl, evaluate_grid
from irlfrac.quadrature import QuadConfig
from irlfrac.verify import format_float, run_tasks, write_reports

log = logging.getLogger("irlfrac.cli")

LOG_FORMAT = "[%(asctime)s - %(name)s] - %(levelname)s - %(message)s"
THREADS_VARIABLE = "IRLFRAC_THREADS"
EXIT_OK, EXIT_UNEXPECTED, EXIT_CONFIG, EXIT_NUMERIC = 0, 1, 2, 3

FUNCTIONS = ("power", "exp", "sin", "power2", "const", "expr")
# parameters each builtin reads; the others are reset to their defaults
FUNCTION_PARAMETERS = {"power": ("lam",), "exp": ("alpha",), "sin": (), "power2": ("lam", "alpha"), "const": ("c",)}
PARAMETER_FLAGS = {"lam": "--lambda", "alpha": "--alpha", "c": "--c"}
SIDES = ("lower", "upper", "both", "classical")
FORMS = {"auto": Form.AUTO, "1": Form.FORM1, "2": Form.FORM2, "3": Form.FORM3}
EVAL_FIELDS = ["x", "value_re", "value_im", "err_estimate", "n_evals"]
TABLE_FIELDS = ["sweep_var", "x", "value_re", "value_im", "err_estimate"]
SIDE_FIELDS = ["lower_re", "lower_im", "upper_re", "upper_im"]

def _number(value):
    return repr(float(value))

def parse_complex(text):
    """
    Parses "re" or "re,im" into a complex number.

    Raises:
        ConfigError: If the text is not one or two floats.
    """
    parts = str(text).split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError as e:
        raise ConfigError(f"{text!r}", None, "Expected a number as 're' or 're,im':") from e
    raise ConfigError(f"{text!r}", None, "Expected a number as 're' or 're,im':")

def render_complex(value):
    """Renders a complex number as "re" or "re,im", inverse of parse_complex."""
    value = complex(value)
    return _number(value.real) if value.imag == 0 else f"{_number(value.real)},{_number(value.imag)}"

@dataclass(frozen=True)
class Sweep:
    """
    A single value or an evenly spaced range "start:stop:count".

    Attributes:
        start (complex): First value.
        stop (complex): Last value.
        count (int): Number of values.
        ranged (bool): Written as a range.
    """
    start: complex
    stop: complex
    count: int = 1
    ranged: bool = False

    @classmethod
    def parse(cls, text):
        """
        Parses a value ("re[,im]") or a real range ("start:stop:count").

        Raises:
            ConfigError: On malformed text or an empty range.
        """
        text = str(text)
        if ":" not in text:
            value = parse_complex(text)
            return cls(value, value)
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError(f"{text!r}", None, "Ranges are written start:stop:count:")
        try:
            start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError as e:
            raise ConfigError(f"{text!r}", None, "Ranges are written start:stop:count:") from e
        if count < 1:
            raise ConfigError(f"{text!r}", None, "Empty range:")
        return cls(complex(start), complex(stop), count, True)

    def render(self):
        """Renders the sweep in the form parse accepts."""
        if not self.ranged:
            return render_complex(self.start)
        return f"{_number(self.start.real)}:{_number(self.stop.real)}:{self.count}"

    def values(self):
        """
        Returns the swept values.

        Returns:
            list: Complex values, a single one for a plain value.
        """
        if not self.ranged:
            return [self.start]
        if self.count == 1:
            return [self.start]
        return [complex(v) for v in np.linspace(self.start.real, self.stop.real, self.count)]

@dataclass(frozen=True)
class RunConfig:
    """
    Validated configuration of one invocation.

    Attributes:
        command (str): "eval", "table" or "verify".
        function (str): Builtin function name.
        lam (complex): Exponent lambda of power and power2.
        alpha (complex): Rate of exp, exponent of (1 - t) in power2.
        c (complex): Value of const.
        order (Sweep): Differentiation order mu.
        side (str): lower, upper, both or classical.
        x (Sweep): Evaluation points.
        y (Sweep): Cut ratio.
        form (str): auto, 1, 2 or 3.
        abs_tol (float): Quadrature absolute tolerance.
        rel_tol (float): Quadrature relative tolerance.
        max_subdivisions (int): Quadrature budget.
        fmt (str): csv or jsonl.
        output (str): Output path, "-" for stdout.
        suite (str): Verification suite, or "all".
        list_suites (bool): List the suites instead of running them.
    """
    command: str
    function: str = "power"
    lam: complex = 1 + 0j
    alpha: complex = 1 + 0j
    c: complex = 1 + 0j
    order: Sweep = None
    side: str = "lower"
    x: Sweep = None
    y: Sweep = None
    form: str = "auto"
    abs_tol: float = 1e-11
    rel_tol: float = 1e-10
    max_subdivisions: int = 2000
    fmt: str = "csv"
    output: str = "-"
    suite: str = "all"
    list_suites: bool = False

    @classmethod
    def from_args(cls, args):
        """
        Builds and validates a configuration from parsed arguments.

        Args:
            args (argparse.Namespace): Output of build_parser().parse_args().

        Returns:
            RunConfig: The configuration, with fields the command does not read reset to defaults.

        Raises:
            ConfigError: On invalid values or combinations.
        """
        if args.command == "verify":
            return cls("verify", fmt=args.format, output=args.output, suite=args.suite, list_suites=args.list)
        if args.function == "expr":
            raise ConfigError("expr", None, "Expression parsing is not supported; use a builtin function:")
        relevant = FUNCTION_PARAMETERS[args.function]
        params = {name: parse_complex(getattr(args, name)) for name in relevant}
        cfg = cls(
            args.command, args.function, **params,
            order=Sweep.parse(args.order), side=args.side, x=Sweep.parse(args.x), y=Sweep.parse(args.y),
            form=args.form, abs_tol=args.abs_tol, rel_tol=args.rel_tol, max_subdivisions=args.max_subdivisions,
            fmt=args.format, output=args.output,
        )
        cfg.validate()
        return cfg

    def validate(self):
        """
        Rejects invalid combinations before any computation.

        Raises:
            ConfigError: On the first problem found.
        """
        if self.command == "eval" and (self.order.ranged or self.y.ranged):
            raise ConfigError(f"order={self.order.render()}, y={self.y.render()}", None, "eval takes a single order and cut ratio:")
        if self.command == "table" and self.order.ranged == self.y.ranged:
            raise ConfigError(f"order={self.order.render()}, y={self.y.render()}", None, "table sweeps exactly one of order and y:")
        for name in ("x", "y"):
            sweep = getattr(self, name)
            if any(value.imag != 0 for value in sweep.values()):
                raise ConfigError(f"{name}={sweep.render()}", None, f"{name} must be real:")
        xs = [value.real for value in self.x.values()]
        if any(not x > 0 for x in xs):
            raise ConfigError(f"x={self.x.render()}", None, "Evaluation points must be positive:")
        if self.function == "power2" and any(x > 1 for x in xs):
            raise ConfigError(f"x={self.x.render()}", None, "power2 is defined on [0, 1]:")
        if self.side != "classical" and any(not 0 < y.real < 1 for y in self.y.values()):
            raise ConfigError(f"y={self.y.render()}", None, "The cut ratio must satisfy 0 < y < 1:")
        try:
            self.quad()
        except IRLFracError as e:
            raise ConfigError(e.message, None, "Invalid quadrature settings:") from e

    def quad(self):
        """Returns the QuadConfig of this run."""
        return QuadConfig(abs_tol=self.abs_tol, rel_tol=self.rel_tol, max_subdivisions=self.max_subdivisions)

    def build_function(self):
        """Returns the FunctionSpec named by this run."""
        if self.function == "power":
            return power(self.lam)
        if self.function == "exp":
            return exponential(self.alpha)
        if self.function == "sin":
            return sine()
        if self.function == "power2":
            return power2(self.lam, self.alpha)
        return constant(self.c)

    def canonical(self):
        """
        Renders the configuration as the argument string that reproduces it.

        Returns:
            str: Arguments in a fixed order with normalised numbers.
        """
        if self.command == "verify":
            parts = ["verify", "--suite", self.suite, "--format", self.fmt, "--output", self.output]
            if self.list_suites:
                parts.append("--list")
            return shlex.join(parts)
        options = [("--function", self.function)]
        options += [(PARAMETER_FLAGS[name], render_complex(getattr(self, name))) for name in FUNCTION_PARAMETERS[self.function]]
        options += [
            ("--order", self.order.render()), ("--side", self.side), ("--x", self.x.render()), ("--y", self.y.render()),
            ("--form", self.form), ("--abs-tol", _number(self.abs_tol)), ("--rel-tol", _number(self.rel_tol)),
            ("--max-subdivisions", str(self.max_subdivisions)), ("--format", self.fmt), ("--output", self.output),
        ]
        # "--flag=value" keeps negative values such as -0.5,0.25 from reading as options
        return shlex.join([self.command] + [f"{flag}={value}" for flag, value in options])

    @classmethod
    def from_canonical(cls, text):
        """
        Parses a canonical argument string back into a configuration.

        Raises:
            ConfigError: If the string does not parse.
        """
        try:
            args = build_parser().parse_args(shlex.split(text))
        except SystemExit as e:
            raise ConfigError(f"{text!r}", None, "Unparseable configuration:") from e
        return cls.from_args(args)

def build_parser():
    """
    Returns the argument parser of the `irlfrac` command.
    """
    parser = argparse.ArgumentParser(prog="irlfrac", description="Incomplete Riemann-Liouville fractional operators.")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=("csv", "jsonl"), default="csv", help="Output format.")
    output.add_argument("--output", default="-", help="Output path, '-' for stdout.")

    operator = argparse.ArgumentParser(add_help=False)
    operator.add_argument("--function", choices=FUNCTIONS, default="power", help="Builtin function.")
    operator.add_argument("--lambda", dest="lam", default="1", help="Exponent lambda of power and power2 ('re[,im]').")
    operator.add_argument("--alpha", default="1", help="Rate of exp, exponent of (1 - t) in power2 ('re[,im]').")
    operator.add_argument("--c", default="1", help="Value of const ('re[,im]').")
    operator.add_argument("--order", required=True, help="Order mu as 're[,im]', or 'start:stop:count' for table.")
    operator.add_argument("--side", choices=SIDES, default="lower", help="Operator side.")
    operator.add_argument("--x", required=True, help="Evaluation point, or 'start:stop:count'.")
    operator.add_argument("--y", default="0.5", help="Cut ratio, or 'start:stop:count' for table.")
    operator.add_argument("--form", choices=tuple(FORMS), default="auto", help="Integral representation.")
    operator.add_argument("--abs-tol", type=float, default=1e-11, help="Quadrature absolute tolerance.")
    operator.add_argument("--rel-tol", type=float, default=1e-10, help="Quadrature relative tolerance.")
    operator.add_argument("--max-subdivisions", type=int, default=2000, help="Quadrature subdivision budget.")

    subparsers.add_parser("eval", parents=[operator, output], help="Evaluate an operator at one or more points.")
    subparsers.add_parser("table", parents=[operator, output], help="Tabulate an operator over an order or y sweep.")
    verify = subparsers.add_parser("verify", parents=[output], help="Run verification suites.")
    verify.add_argument("--suite", default="all", help="Suite name or 'all'.")
    verify.add_argument("--list", action="store_true", help="List the suites and exit.")
    return parser

def thread_count(environ = None):
    """
    Reads IRLFRAC_THREADS.

    Returns:
        int: The thread cap, 1 when unset.

    Raises:
        ConfigError: If the variable is not a positive integer.
    """
    raw = (os.environ if environ is None else environ).get(THREADS_VARIABLE)
    if raw is None or raw == "":
        return 1
    try:
        threads = int(raw)
    except ValueError as e:
        raise ConfigError(f"{THREADS_VARIABLE}={raw!r}", None, "Thread count must be a positive integer:") from e
    if threads < 1:
        raise ConfigError(f"{THREADS_VARIABLE}={raw!r}", None, "Thread count must be a positive integer:")
    return threads

def _evaluate(cfg, f, mu, y, xs, threads):
    # one (lower, upper) or (value, None) pair per x
    quad = cfg.quad()
    if cfg.side == "classical":
        tasks = [lambda x=x: classical_rl(f, mu, 0.0, x, quad) for x in xs]
        return [(result, None) for result in run_tasks(tasks, threads)]
    sides = [Side.LOWER, Side.UPPER] if cfg.side == "both" else [Side(cfg.side)]
    requests = [EvalRequest(f, mu, x, y, side, FORMS[cfg.form], quad) for x in xs for side in sides]
    results = evaluate_grid(requests, threads)
    if cfg.side == "both":
        return [(results[2 * i], results[2 * i + 1]) for i in range(len(xs))]
    return [(result, None) for result in results]

def _row(x, pair):
    first, second = pair
    total = first if second is None else first + second
    row = {"x": x, "value_re": total.value.real, "value_im": total.value.imag,
           "err_estimate": total.err_estimate, "n_evals": total.n_evals}
    if second is not None:
        row.update(lower_re=first.value.real, lower_im=first.value.imag, upper_re=second.value.real, upper_im=second.value.imag)
    return row

def _cell(value):
    if isinstance(value, float):
        return format_float(value)
    return value

def _json_cell(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value

def write_rows(rows, fields, stream, fmt):
    """
    Writes value rows as CSV (with header) or JSON lines.
    """
    if fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(fields)
        for row in rows:
            writer.writerow([_cell(row[key]) for key in fields])
    else:
        for row in rows:
            stream.write(json.dumps({key: _json_cell(row[key]) for key in fields}) + "\n")

def cmd_eval(cfg, stream, threads = 1):
    """
    Writes one row per x: x, value_re, value_im, err_estimate, n_evals.

    With side "both" the value is lower + upper and lower_re, lower_im, upper_re, upper_im follow.

    Returns:
        int: Exit code.
    """
    f = cfg.build_function()
    xs = [x.real for x in cfg.x.values()]
    pairs = _evaluate(cfg, f, cfg.order.start, cfg.y.start.real, xs, threads)
    rows = [_row(x, pair) for x, pair in zip(xs, pairs)]
    fields = EVAL_FIELDS + (SIDE_FIELDS if cfg.side == "both" else [])
    write_rows(rows, fields, stream, cfg.fmt)
    return EXIT_OK

def cmd_table(cfg, stream, threads = 1):
    """
    Writes long-format rows sweep_var, x, value_re, value_im, err_estimate over the swept order or y.

    Returns:
        int: Exit code.
    """
    f = cfg.build_function()
    xs = [x.real for x in cfg.x.values()]
    rows = []
    if cfg.order.ranged:
        sweep = [(mu.real, mu, cfg.y.start.real) for mu in cfg.order.values()]
    else:
        sweep = [(y.real, cfg.order.start, y.real) for y in cfg.y.values()]
    for label, mu, y in sweep:
        for x, pair in zip(xs, _evaluate(cfg, f, mu, y, xs, threads)):
            rows.append(dict(_row(x, pair), sweep_var=label))
    fields = TABLE_FIELDS + (SIDE_FIELDS if cfg.side == "both" else [])
    write_rows(rows, fields, stream, cfg.fmt)
    return EXIT_OK

def cmd_verify(cfg, stream, threads = 1, manager = None, err = None):
    """
    Runs the selected suites, streams their reports and prints "suites=<n> checks=<m> unexpected=<k>" to stderr.

    Returns:
        int: 0 if every report has its expected polarity, 1 otherwise.

    Raises:
        ConfigError: On an unknown suite name.
    """
    manager = manager or VerificationManager(threads=threads)
    err = err or sys.stderr
    if cfg.list_suites:
        for name in manager.list_suites():
            stream.write(f"{name}\n")
        return EXIT_OK
    if cfg.suite == "all":
        names = manager.list_suites()
    elif cfg.suite in manager.list_suites():
        names = [cfg.suite]
    else:
        raise ConfigError(f"{cfg.suite!r}", None, f"Unknown suite (choose from all, {', '.join(manager.list_suites())}):")
    results = {}
    for i, name in enumerate(names):
        results[name] = manager.run_suite(name)
        write_reports(results[name], stream, cfg.fmt, header=(i == 0))
    summary = manager.summary(results)
    err.write(f"suites={summary['suites']} checks={summary['checks']} unexpected={summary['unexpected']}\n")
    return EXIT_UNEXPECTED if summary["unexpected"] else EXIT_OK

COMMANDS = {"eval": cmd_eval, "table": cmd_table, "verify": cmd_verify}

def main(argv = None, stdout = None, stderr = None):
    """
    Runs the `irlfrac` command.

    Args:
        argv (list, optional): Arguments without the program name. Defaults to sys.argv[1:].
        stdout (file, optional): Output stream when --output is '-'. Defaults to sys.stdout.
        stderr (file, optional): Stream for errors and the verify summary. Defaults to sys.stderr.

    Returns:
        int: Exit code.
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_CONFIG
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format=LOG_FORMAT, stream=stderr)
    try:
        cfg = RunConfig.from_args(args)
        threads = thread_count()
        log.info(f"Running {cfg.canonical()} with {threads} thread(s).")
        command = COMMANDS[cfg.command]
        extra = {"err": stderr} if cfg.command == "verify" else {}
        if cfg.output == "-":
            return command(cfg, stdout, threads, **extra)
        with open(cfg.output, "w", encoding="utf-8", newline="") as stream:
            return command(cfg, stream, threads, **extra)
    except ConfigError as e:
        log.error(e.message)
        stderr.write(f"irlfrac: {e.message}\n")
        return EXIT_CONFIG
    except IRLFracError as e:
        log.error(e.message)
        stderr.write(f"irlfrac: {e.message}\n")
        return EXIT_NUMERIC
    except OSError as e:
        log.error(f"Cannot write output: {e}")
        stderr.write(f"irlfrac: Cannot write output: {e}\n")
        return EXIT_CONFIG
    except (ArithmeticError, ValueError) as e:
        log.error(f"Numerical error: {e!r}")
        stderr.write(f"irlfrac: Numerical error: {e!r}\n")
        return EXIT_NUMERIC

# Define the public interface of the module
__all__ = ["RunConfig", "Sweep", "parse_complex", "render_complex", "build_parser", "thread_count", "write_rows",
           "cmd_eval", "cmd_table", "cmd_verify", "main"]
