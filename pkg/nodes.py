from pocketflow import Node, BatchNode
import argparse
import dataclasses
import json
import os
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from utils import (
    get_logger, load_settings, UsageError, InputValidator,
    cycle, path, complete, complete_bipartite, k4_prime, k4_prime_edge_names, w5_prime,
    w5_prime_edge_names, graph_a, mycielski, iterated_line_graph, line_graph,
    parse_word, represented_graph, represents, is_k_uniform, eval_statement, Statement, Quantifier,
    decide_word_representable, Verdict, find_shortcut, is_acyclic,
    orientation_d, rook_orientation, check_remarks, level_sets, c_part, restricted_to_b, restricted_to_c,
    load_graph, save_graph, dump_edge_list, dump_orientation, certificate_to_json,
    graph_to_dot, orientation_to_dot, claims_for_scope, run_claim, SCOPES,
)

# Configure logging
logger = get_logger(__name__)

FAMILIES = (
    "cycle", "path", "complete", "complete-bipartite", "k4-prime", "w5-prime", "graph-a", "mycielski-cycle",
)
FIGURES = (
    "k4-prime", "line-k4-prime", "w5-prime", "line-w5-prime", "graph-a", "mu-cycle", "rook", "d",
    "d-b-part", "d-c-part",
)

@dataclass
class RunReport:
    """Outcome of one command invocation."""

    command: List[str]
    verdicts: List[Dict[str, Any]] = field(default_factory=list)
    certificates: List[Dict[str, Any]] = field(default_factory=list)
    wall_clock: float = 0.0
    exit_status: int = 0

    def to_dict(self) -> Dict[str, Any]:
        # wall clock is left out so the JSON form is reproducible
        return {
            "command": self.command,
            "verdicts": self.verdicts,
            "certificates": self.certificates,
            "exit_status": self.exit_status,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

class CommandLineParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting."""

    def error(self, message):
        raise UsageError(message)

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the run report as JSON")
    common.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    common.add_argument("--workers", type=int, help="search processes (default from config)")
    common.add_argument("--config", help="YAML config file")

    parser = CommandLineParser(prog="wordrep", description="Word-representability toolkit")
    sub = parser.add_subparsers(dest="command", parser_class=CommandLineParser)
    sub.required = True

    p = sub.add_parser("gen", parents=[common], help="generate a graph family")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--out")

    p = sub.add_parser("line", parents=[common], help="line graph of a graph file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--out")

    p = sub.add_parser("mycielski", parents=[common], help="Mycielski graph of a graph file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")

    p = sub.add_parser("check-word", parents=[common], help="check that a word represents a graph")
    p.add_argument("--word", required=True)
    p.add_argument("--in", dest="input")

    p = sub.add_parser("eval-stmt", parents=[common], help="evaluate an exists/forall statement on a cyclic word")
    p.add_argument("--word", required=True)
    p.add_argument("--kind", required=True, choices=[q.value for q in Quantifier])
    p.add_argument("--triple", required=True, nargs=3, metavar=("A", "B", "C"))

    p = sub.add_parser("decide", parents=[common], help="decide word-representability")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--expect", choices=["representable", "non-representable"])
    p.add_argument("--certificate")

    p = sub.add_parser("orient-d", parents=[common], help="build orientation D of L(mycielski(C_2n+1))")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--remarks", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("rook", parents=[common], help="rook orientation of L(K_m,n)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("verify-paper", parents=[common], help="run the claim suites")
    p.add_argument("--scope", default="all", choices=SCOPES)

    p = sub.add_parser("export-dot", parents=[common], help="write a figure as DOT")
    p.add_argument("--figure", required=True, choices=FIGURES)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--out")
    return parser

def _emit(shared, text: str):
    shared.setdefault("lines", []).append(text)

def _write_or_emit(shared, text: str, out: Optional[str]):
    if out:
        directory = os.path.dirname(out)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
        _emit(shared, f"wrote {out}")
    else:
        _emit(shared, text.rstrip("\n"))

class ParseCommandNode(Node):
    """Node to parse argv and route to the command node."""

    def prep(self, shared):
        return shared["argv"]

    def exec(self, argv):
        args = build_parser().parse_args(argv)
        if args.workers is not None:
            InputValidator.validate_range("workers", args.workers, 1)
        return args

    def post(self, shared, prep_res, exec_res):
        """Store the parsed arguments and effective settings."""
        if exec_res.config:
            os.environ["WORDREP_CONFIG"] = exec_res.config
            load_settings.cache_clear()
        settings = load_settings()
        if exec_res.workers is not None:
            settings = dataclasses.replace(settings, workers=exec_res.workers)
        shared["args"] = exec_res
        shared["settings"] = settings
        shared.setdefault("exit_code", 0)
        logger.info(f"Command {exec_res.command} requested")
        return exec_res.command

class GenerateGraphNode(Node):
    def prep(self, shared):
        return shared["args"]

    def exec(self, args):
        def need(name):
            value = getattr(args, name)
            if value is None:
                raise UsageError(f"--{name} is required for family {args.family}")
            return value

        builders = {
            "cycle": lambda: cycle(need("n")),
            "path": lambda: path(need("n")),
            "complete": lambda: complete(need("n")),
            "complete-bipartite": lambda: complete_bipartite(need("m"), need("n")),
            "k4-prime": k4_prime,
            "w5-prime": w5_prime,
            "graph-a": graph_a,
            "mycielski-cycle": lambda: mycielski(cycle(2 * InputValidator.validate_range("n", need("n"), 1) + 1)),
        }
        return builders[args.family]()

    def post(self, shared, prep_res, exec_res):
        if prep_res.out:
            save_graph(exec_res, prep_res.out)
            _emit(shared, f"wrote {exec_res} to {prep_res.out}")
        else:
            _emit(shared, dump_edge_list(exec_res).rstrip("\n"))
        shared.setdefault("verdicts", []).append(
            {"family": prep_res.family, "vertices": exec_res.order, "edges": exec_res.size}
        )
        return "default"

class LineGraphNode(Node):
    def prep(self, shared):
        return shared["args"]

    def exec(self, args):
        return iterated_line_graph(load_graph(args.input), args.k)

    def post(self, shared, prep_res, exec_res):
        if prep_res.out:
            save_graph(exec_res, prep_res.out)
            _emit(shared, f"wrote {exec_res} to {prep_res.out}")
        else:
            _emit(shared, dump_edge_list(exec_res).rstrip("\n"))
        shared.setdefault("verdicts", []).append({"line_graph": prep_res.k, "vertices": exec_res.order, "edges": exec_res.size})
        return "default"

class MycielskiNode(Node):
    def prep(self, shared):
        return shared["args"]

    def exec(self, args):
        return mycielski(load_graph(args.input))

    def post(self, shared, prep_res, exec_res):
        if prep_res.out:
            save_graph(exec_res, prep_res.out)
            _emit(shared, f"wrote {exec_res} to {prep_res.out}")
        else:
            _emit(shared, dump_edge_list(exec_res).rstrip("\n"))
        shared.setdefault("verdicts", []).append({"mycielski": True, "vertices": exec_res.order, "edges": exec_res.size})
        return "default"

class CheckWordNode(Node):
    """Node to check a word against a graph file, or report the graph it represents."""

    def prep(self, shared):
        return shared["args"]

    def exec(self, args):
        w = parse_word(args.word)
        uniform = is_k_uniform(w)
        if args.input:
            g = load_graph(args.input)
            return {"word": args.word, "uniform": uniform, "represents": represents(w, g)}
        g = represented_graph(w, w.alphabet())
        return {"word": args.word, "uniform": uniform, "edges": [list(e) for e in g.edges]}

    def post(self, shared, prep_res, exec_res):
        _emit(shared, f"uniform: {exec_res['uniform']}")
        if "represents" in exec_res:
            _emit(shared, f"represents: {str(exec_res['represents']).lower()}")
            if not exec_res["represents"]:
                shared["exit_code"] = 1
        else:
            _emit(shared, "edges: " + ", ".join(f"{u}-{v}" for u, v in exec_res["edges"]))
        shared.setdefault("verdicts", []).append(exec_res)
        return "default"

class EvalStatementNode(Node):
    def prep(self, shared):
        return shared["args"]

    def exec(self, args):
        w = parse_word(args.word).as_cyclic()
        statement = Statement(Quantifier(args.kind), *args.triple)
        return str(statement), eval_statement(w, statement)

    def post(self, shared, prep_res, exec_res):
        statement, value = exec_res
        _emit(shared, f"{statement}: {str(value).lower()}")
        shared.setdefault("verdicts", []).append({"statement": statement, "value": value})
        return "default"

class DecideNode(Node):
    """Node to decide representability and emit a verified certificate."""

    def prep(self, shared):
        return shared["args"], shared["settings"]

    def exec(self, inputs):
        args, settings = inputs
        g = load_graph(args.input)
        logger.info(f"Deciding {g} with {settings.workers} worker(s)")
        return decide_word_representable(g, workers=settings.workers)

    def post(self, shared, prep_res, exec_res):
        args, _ = prep_res
        _emit(shared, f"verdict: {exec_res.verdict.value}")
        if exec_res.exhaustion is not None:
            _emit(shared, f"branches explored: {exec_res.exhaustion.branches_explored} ({exec_res.exhaustion.symmetry_note})")
        if args.certificate:
            _write_or_emit(shared, certificate_to_json(exec_res), args.certificate)
        shared.setdefault("verdicts", []).append({"verdict": exec_res.verdict.value})
        shared.setdefault("certificates", []).append(exec_res.to_dict())
        if args.expect:
            expected = Verdict.REPRESENTABLE if args.expect == "representable" else Verdict.NON_REPRESENTABLE
            if exec_res.verdict is not expected:
                logger.warning(f"Expected {expected.value}, got {exec_res.verdict.value}")
                shared["exit_code"] = 1
        return "default"

def _verify_lines(shared, d, label: str) -> bool:
    acyclic = is_acyclic(d)
    witness = find_shortcut(d) if acyclic else None
    ok = acyclic and witness is None
    _emit(shared, f"{label} acyclic: {str(acyclic).lower()}")
    if acyclic:
        _emit(shared, f"{label} shortcut: {witness if witness is not None else 'none'}")
    _emit(shared, f"semi-transitive: {str(ok).lower()}")
    shared.setdefault("verdicts", []).append({"orientation": label, "acyclic": acyclic, "semi_transitive": ok})
    return ok

class OrientDNode(Node):
    def prep(self, shared):
        return shared["args"]

    def exec(self, args):
        d = orientation_d(args.n)
        report = check_remarks(args.n, d) if args.remarks else None
        return d, report

    def post(self, shared, prep_res, exec_res):
        d, report = exec_res
        _emit(shared, f"D(n={prep_res.n}): {d}")
        if prep_res.verify and not _verify_lines(shared, d, "D"):
            shared["exit_code"] = 1
        if report is not None:
            for clause in report.clauses:
                status = "pass" if clause.passed else f"FAIL {clause.detail}"
                _emit(shared, f"{clause.clause}: {status}")
            shared.setdefault("verdicts", []).append({"remarks": report.to_dict()})
            if not report.passed:
                shared["exit_code"] = 1
        if prep_res.out:
            _write_or_emit(shared, dump_orientation(d), prep_res.out)
        return "default"

class RookNode(Node):
    def prep(self, shared):
        return shared["args"]

    def exec(self, args):
        return rook_orientation(args.m, args.n)

    def post(self, shared, prep_res, exec_res):
        _emit(shared, f"rook(m={prep_res.m}, n={prep_res.n}): {exec_res}")
        if prep_res.verify and not _verify_lines(shared, exec_res, "rook"):
            shared["exit_code"] = 1
        if prep_res.out:
            _write_or_emit(shared, dump_orientation(exec_res), prep_res.out)
        return "default"

class ExportDotNode(Node):
    """Node to render one of the named figures as DOT."""

    def prep(self, shared):
        return shared["args"]

    def exec(self, args):
        n, m = args.n, args.m
        if args.figure == "k4-prime":
            return graph_to_dot(k4_prime(), "K4prime")
        if args.figure == "line-k4-prime":
            return graph_to_dot(line_graph(k4_prime(), k4_prime_edge_names()), "LK4prime")
        if args.figure == "w5-prime":
            return graph_to_dot(w5_prime(), "W5prime")
        if args.figure == "line-w5-prime":
            return graph_to_dot(line_graph(w5_prime(), w5_prime_edge_names()), "LW5prime")
        if args.figure == "graph-a":
            return graph_to_dot(graph_a(), "A")
        if args.figure == "mu-cycle":
            g = mycielski(cycle(2 * InputValidator.validate_range("n", n, 1) + 1))
            size = 2 * n + 1
            return graph_to_dot(g, "mu", [g.vertices[:size], g.vertices[size:2 * size], g.vertices[2 * size:]])
        if args.figure == "rook":
            d = rook_orientation(m, n)
            rows = {}
            for v in d.base.vertices:
                rows.setdefault(v.split(",")[0], []).append(v)
            return orientation_to_dot(d, "rook", rows.values())
        levels = level_sets(n)
        rows = [r for r in levels.rows.values() if r]
        if args.figure == "d":
            return orientation_to_dot(orientation_d(n), "D", rows + [c_part(n)])
        if args.figure == "d-b-part":
            return orientation_to_dot(restricted_to_b(n), "D_B", rows)
        return orientation_to_dot(restricted_to_c(n), "D_C")

    def post(self, shared, prep_res, exec_res):
        _write_or_emit(shared, exec_res, prep_res.out)
        shared.setdefault("verdicts", []).append({"figure": prep_res.figure})
        return "default"

class RunClaimsNode(BatchNode):
    """Batch node running each claim of the selected scope."""

    def prep(self, shared):
        tasks = claims_for_scope(shared["args"].scope, shared["settings"])
        logger.info(f"Running {len(tasks)} claim(s) for scope {shared['args'].scope}")
        return tasks

    def exec(self, task):
        name, thunk = task
        return run_claim(name, thunk)

    def post(self, shared, prep_res, exec_res_list):
        shared["claims"] = exec_res_list
        return "default"

class ClaimReportNode(Node):
    def prep(self, shared):
        return shared["claims"]

    def exec(self, claims):
        return all(c.passed for c in claims)

    def post(self, shared, prep_res, exec_res):
        for claim in prep_res:
            _emit(shared, claim.line())
        _emit(shared, f"{sum(c.passed for c in prep_res)}/{len(prep_res)} claims verified")
        shared.setdefault("verdicts", []).extend(c.to_dict() for c in prep_res)
        if not exec_res:
            shared["exit_code"] = 1
        return "default"

class EmitReportNode(Node):
    """Node to print the command output and assemble the run report."""

    def prep(self, shared):
        return shared

    def exec(self, shared):
        return RunReport(
            command=list(shared["argv"]),
            verdicts=shared.get("verdicts", []),
            certificates=shared.get("certificates", []),
            wall_clock=time.time() - shared.get("started", time.time()),
            exit_status=shared.get("exit_code", 0),
        )

    def post(self, shared, prep_res, exec_res):
        shared["report"] = exec_res
        if shared["args"].json:
            print(exec_res.to_json())
        else:
            for line in shared.get("lines", []):
                print(line)
            print(f"elapsed: {exec_res.wall_clock:.2f}s")
        return "default"
