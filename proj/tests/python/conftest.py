import os
import sys

# build-tree runs: the package sources live under python/, the extension is on
# PYTHONPATH already (set by ctest)
pkg = os.environ.get("CCALG_PY_PACKAGE")
if pkg and pkg not in sys.path:
    sys.path.insert(0, pkg)
