"""Floor diagrams relative to a conic and the invariants of del Pezzo surfaces built from them."""
import sys

__version__ = "0.1.0"

# tomllib needs 3.11
if not (3, 11) <= sys.version_info[:2] <= (3, 13):
    sys.stderr.write(
        "conic-floors: unsupported Python {ver}, please use 3.11-3.13\n".format(
            ver=".".join(map(str, sys.version_info[:3]))
        )
    )
