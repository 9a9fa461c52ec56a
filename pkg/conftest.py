import sys
from pathlib import Path

# let the tests run against the source tree without an install
sys.path.insert(0, str(Path(__file__).parent / "src"))
