"""Exact commutative algebra: Groebner bases, free resolutions, Ext modules,
duality pairings and linkage hulls over Q or F_p.

The heavy lifting happens in the native extension; this package re-exports it
and adds a small convenience wrapper around the command runner.
"""

try:
    from ._ccalg import (  # type: ignore[attr-defined]
        ParseError,
        PreconditionError,
        SearchError,
        SessionError,
        ShapeError,
        groebner,
        normal_form,
        run,
        syzygies,
        __version__,
    )
except ImportError:  # build-tree layout: extension next to the test runner
    from _ccalg import (  # type: ignore[no-redef]
        ParseError,
        PreconditionError,
        SearchError,
        SessionError,
        ShapeError,
        groebner,
        normal_form,
        run,
        syzygies,
        __version__,
    )

__all__ = [
    "ParseError",
    "PreconditionError",
    "SearchError",
    "SessionError",
    "ShapeError",
    "command",
    "groebner",
    "normal_form",
    "run",
    "syzygies",
    "__version__",
]


def command(script, cmd, *args, **kwargs):
    """Run one command against a session script and return the report dict.

    Raises RuntimeError when the command reports an input or precondition
    error (exit code 2). A failed theorem verdict is returned as-is, with
    report["verdicts"] carrying the individual outcomes.
    """
    report, code = run(script, cmd, [str(a) for a in args], **kwargs)
    if code == 2:
        raise RuntimeError(report.get("error", "input error"))
    return report
