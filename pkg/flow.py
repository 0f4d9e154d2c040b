from pocketflow import Flow
from nodes import (
    ParseCommandNode,
    GenerateGraphNode,
    LineGraphNode,
    MycielskiNode,
    CheckWordNode,
    EvalStatementNode,
    DecideNode,
    OrientDNode,
    RookNode,
    ExportDotNode,
    RunClaimsNode,
    ClaimReportNode,
    EmitReportNode
)

def create_wordrep_flow():
    """
    Create and return the command flow.

    This flow implements a workflow that:
    1. Parses the command line
    2. Routes to the node (or sub-flow) for the command
    3. Prints the output and assembles the run report
    """
    parse_command = ParseCommandNode()
    emit_report = EmitReportNode()

    commands = {
        "gen": GenerateGraphNode(),
        "line": LineGraphNode(),
        "mycielski": MycielskiNode(),
        "check-word": CheckWordNode(),
        "eval-stmt": EvalStatementNode(),
        "decide": DecideNode(),
        "orient-d": OrientDNode(),
        "rook": RookNode(),
        "export-dot": ExportDotNode(),
        "verify-paper": create_verify_paper_flow(),
    }

    # Each command leads to emit_report
    for action, node in commands.items():
        parse_command - action >> node
        node >> emit_report

    return Flow(start=parse_command)

def create_verify_paper_flow():
    """Create a flow that runs the claims of one scope and summarises them."""
    run_claims = RunClaimsNode()
    claim_report = ClaimReportNode()

    run_claims >> claim_report

    return Flow(start=run_claims)
