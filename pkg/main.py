import logging
import os
import sys
import time
from typing import List, Optional, Tuple

from flow import create_wordrep_flow
from nodes import RunReport
from utils import (
    load_settings, WordRepError, ScaleGuardError, CertificateError,
)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_GUARD = 3

def configure_logging(level: Optional[str] = None):
    """Configure logging for the application."""
    settings = load_settings()
    log_dir = os.path.dirname(settings.log_file)
    # Create logs directory if it doesn't exist
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)

    # Configure root logger
    logging.basicConfig(
        level=getattr(logging, level or settings.log_level, logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            # File handler for detailed logs
            logging.FileHandler(settings.log_file),
            # Console handler for important messages
            logging.StreamHandler()
        ]
    )

    # Set more restrictive log level for some noisy libraries
    logging.getLogger("concurrent.futures").setLevel(logging.WARNING)
    logging.getLogger("numpy").setLevel(logging.WARNING)

    return logging.getLogger("main")

def _requested_log_level(argv: List[str]) -> Optional[str]:
    for i, arg in enumerate(argv):
        if arg == "--log-level" and i + 1 < len(argv):
            return argv[i + 1].upper()
        if arg.startswith("--log-level="):
            return arg.split("=", 1)[1].upper()
    return None

def exit_code_for(error: WordRepError) -> int:
    """Map a toolkit error to its exit status."""
    if isinstance(error, ScaleGuardError):
        return EXIT_GUARD
    if isinstance(error, CertificateError):
        return EXIT_REFUTED
    # UsageError, ValidationError and its subclasses
    return EXIT_USAGE

def run(argv: List[str]) -> Tuple[RunReport, int]:
    """Run one command; returns the report and the exit status."""
    logger = logging.getLogger("main")
    shared = {"argv": list(argv), "started": time.time()}
    try:
        flow = create_wordrep_flow()
        flow.run(shared)
    except WordRepError as e:
        code = exit_code_for(e)
        logger.error(f"{type(e).__name__}: {str(e)}")
        print(f"error: {str(e)}", file=sys.stderr)
        report = RunReport(
            command=list(argv),
            verdicts=shared.get("verdicts", []) + [{"error": type(e).__name__, "message": str(e)}],
            certificates=shared.get("certificates", []),
            wall_clock=time.time() - shared["started"],
            exit_status=code,
        )
        return report, code
    report = shared["report"]
    return report, report.exit_status

def main():
    """Main application entry point."""
    argv = sys.argv[1:]
    # Configure logging
    logger = configure_logging(_requested_log_level(argv))
    logger.info("Starting wordrep")

    report, code = run(argv)

    logger.info(f"wordrep finished with exit status {code}")
    sys.exit(code)

if __name__ == "__main__":
    main()
