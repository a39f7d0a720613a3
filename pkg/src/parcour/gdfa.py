"""Grow-diag-final-and symmetrization of two directional alignments.

Both inputs are given in the same (source index, target index) orientation;
callers transpose the reverse-direction decoder output first.  The scan
conventions are fixed so outputs are reproducible:

  * seed with the intersection;
  * GROW-DIAG passes iterate a row-major snapshot of the current set; each
    candidate neighbor (8-neighborhood, enumerated row-major) is added
    immediately when it lies in the union and its source or target token is
    still unaligned; passes repeat until nothing changes;
  * FINAL-AND scans fwd then rev, row-major, adding links whose source and
    target tokens are both still unaligned.
"""

from __future__ import annotations

Link = tuple[int, int]

_NEIGHBORS = ((-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1))


class LinkOutOfBounds(Exception):
    pass


def _check_bounds(links: set[Link], src_len: int, tgt_len: int, name: str) -> None:
    for s, t in links:
        if not (0 <= s < src_len and 0 <= t < tgt_len):
            raise LinkOutOfBounds(f"{name} link ({s},{t}) outside {src_len}x{tgt_len}")


def symmetrize_gdfa(fwd: set[Link], rev: set[Link], src_len: int, tgt_len: int) -> set[Link]:
    fwd = set(fwd)
    rev = set(rev)
    _check_bounds(fwd, src_len, tgt_len, "fwd")
    _check_bounds(rev, src_len, tgt_len, "rev")
    union = fwd | rev

    aligned = fwd & rev
    aligned_s = {s for s, _ in aligned}
    aligned_t = {t for _, t in aligned}

    changed = True
    while changed:
        changed = False
        for s, t in sorted(aligned):
            for ds, dt in _NEIGHBORS:
                ns, nt = s + ds, t + dt
                if not (0 <= ns < src_len and 0 <= nt < tgt_len):
                    continue
                cand = (ns, nt)
                if cand in aligned or cand not in union:
                    continue
                if ns not in aligned_s or nt not in aligned_t:
                    aligned.add(cand)
                    aligned_s.add(ns)
                    aligned_t.add(nt)
                    changed = True

    for links in (fwd, rev):
        for s, t in sorted(links):
            if s not in aligned_s and t not in aligned_t:
                aligned.add((s, t))
                aligned_s.add(s)
                aligned_t.add(t)

    return aligned


def transpose(links: set[Link]) -> set[Link]:
    return {(t, s) for s, t in links}
