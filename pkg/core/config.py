"""
Configuration file for the XNLP companion toolkit
"""
import os
from dotenv import load_dotenv

load_dotenv()

DEFAULT_BUDGET = int(os.getenv("XNLP_BUDGET", 10_000_000))

# poset_width switches to Dilworth matching above this many tasks
EXHAUSTIVE_WIDTH_LIMIT = int(os.getenv("XNLP_EXHAUSTIVE_WIDTH_LIMIT", 20))

# uniform emulation sweeps fiber sets up to this factor c, and walks vertices above it
FIBER_SWEEP_LIMIT = int(os.getenv("XNLP_FIBER_SWEEP_LIMIT", 6))

LOG_LEVEL = os.getenv("XNLP_LOG_LEVEL", "WARNING")
VERIFY_WORKERS = int(os.getenv("XNLP_WORKERS", 1))
MANIFEST_PATH = os.getenv("XNLP_MANIFEST")
BASE_SEED = int(os.getenv("XNLP_SEED", 2022))

SOLVE_MODES = ('exhaustive', 'structured')

CA_ACCEPTANCE = ('at-least-one', 'all', 'non-halting')

VERTEX_PROBLEM_KINDS = {
    'dominating-set': 'at_most',
    'independent-set': 'at_least',
    'clique': 'at_least'
}

RECONFIGURATION_KINDS = ('dominating-set', 'independent-set', 'clique')
RECONFIGURATION_RULES = ('TS', 'TJ')

EXIT_CODES = {
    'ok': 0,
    'usage': 2,
    'resource': 3,
    'verification': 4
}
