"""
The realforms command line
==========================

Every library capability is reachable from the ``realforms`` command.  Here
the entry point is called in-process; from a shell the same arguments work
after ``pip install``.
"""

from realforms.cli import main

main(["lattice", "--r", "6", "--kperp"])
main(["entropy", "--r", "10", "--eps", "1/100000"])
main(["h1", "s3_triv_n3_1", "--use-normal"])
main(["freeproduct", "--signs", "-1,+1,-1"])

###############################################################################
# ``--format json`` emits a report whose ``report`` part is deterministic.

code = main(["entropy", "--r", "9", "--assert-positive", "--format", "json"])
print("exit code", code)
