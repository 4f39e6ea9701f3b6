"""Exit codes of the dcm-toolkit command line.

Decision commands report their verdict through the exit status, so scripts
can branch on it without parsing output. Input and usage errors share one
code. Signal codes (130, 141, 143) are informational constants only;
``lib_cli_exit_tools`` translates signals into them.

Contents:
    * :class:`ExitCode` - IntEnum of every status the CLI returns.
"""

from __future__ import annotations

from enum import IntEnum

from dcm_toolkit.domain.enums import ScreenVerdict, TppStatus, Verdict


class ExitCode(IntEnum):
    """Process exit statuses.

    * 0: success, or a positive verdict (``yes``, ``pass``, ``positive``)
    * 1: a negative verdict (``no``, ``reject``, ``negative``, not graphical)
    * 2: malformed input, usage or configuration error
    * 3: undecided because a budget ran out (``unknown``)
    * 128+N: signal N (informational only)

    Example:
        >>> ExitCode.SUCCESS
        <ExitCode.SUCCESS: 0>
        >>> int(ExitCode.UNKNOWN)
        3
    """

    SUCCESS = 0
    NEGATIVE = 1
    ERROR = 2
    UNKNOWN = 3
    SIGNAL_INT = 130
    BROKEN_PIPE = 141
    SIGNAL_TERM = 143

    @classmethod
    def for_verdict(cls, verdict: Verdict | ScreenVerdict | TppStatus) -> ExitCode:
        """Map a decision outcome onto its exit status.

        Example:
            >>> ExitCode.for_verdict(Verdict.NO)
            <ExitCode.NEGATIVE: 1>
            >>> ExitCode.for_verdict(TppStatus.UNKNOWN)
            <ExitCode.UNKNOWN: 3>
            >>> ExitCode.for_verdict(ScreenVerdict.PASS)
            <ExitCode.SUCCESS: 0>
        """
        if verdict in (Verdict.YES, ScreenVerdict.PASS, TppStatus.POSITIVE):
            return cls.SUCCESS
        if verdict in (Verdict.UNKNOWN, TppStatus.UNKNOWN):
            return cls.UNKNOWN
        return cls.NEGATIVE


__all__ = ["ExitCode"]
