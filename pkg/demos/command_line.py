"""
The linkquandle command
=======================

Each subcommand prints one JSON object.  Here it is driven in-process.
"""

import tempfile
from pathlib import Path

from linkquandle.cli import main

tmp = Path(tempfile.mkdtemp())
(tmp / "hopf+.gc").write_text("O1+ U2+ / U1+ O2+\n")
(tmp / "hopf-.gc").write_text("# negative Hopf link\nO1- U2- / U1- O2-\n")

for argv in (["linking", "hopf+.gc"],
             ["tc-iso", "hopf+.gc", "hopf-.gc"],
             ["color", "hopf+.gc", "--target", "xn:2"],
             ["group", "hopf-.gc", "--quotient", "wirtinger"],
             ["fuzz", "hopf+.gc", "--steps", "3", "--seed", "1"]):
    print("$ linkquandle", " ".join(argv))
    code = main([str(tmp / a) if a.endswith(".gc") else a for a in argv])
    print("exit", code)
