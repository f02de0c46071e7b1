# coding: utf-8

# # Driving the command line from Python
#
# Each command prints a single JSON report with a fixed set of keys.
# The exit code is 0 on a pass, 1 when a checked property fails and 2 on bad input.

# In[1]:

import contextlib
import io
import json

from compact_lines.cli import main


def run(*argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        code = main(list(argv))
    return code, json.loads(out.getvalue())


# In[2]:

code, report = run("dual", "k", "fin(3)")
print(code, report["instance"]["result"])


# In[3]:

code, report = run("gap", "--kappa", "w.6", "--s", "w.2,w.4", "--delta", "w.4", "--depth", "40")
print(code, report["instance"]["result"], report["verdict"])

code, report = run("gap", "--kappa", "w.6", "--s", "w.2", "--delta", "w.4")
print(code, report["instance"]["result"], report["verdict"])


# In[4]:

code, report = run("oracle", "lemma33", "--n", "5")
print(code, report["cases"], "cases,", len(report["failures"]), "failures")

code, report = run("parse", "fin(-1)")
print(code, report["failures"][0]["error"])
