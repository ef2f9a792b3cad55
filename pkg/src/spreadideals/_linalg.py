"""Exact ranks of sparse integer matrices and reduced simplicial homology over Q."""

from math import gcd


def _normalize(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {k: v // g for k, v in row.items()}


def exact_rank(rows, limit=None):
    """Rank over Q of a matrix given as sparse rows (``{column: int}``).

    Fraction-free elimination: the pivot of a row is its smallest column, and a
    row is reduced against the stored pivot rows until it vanishes or finds a
    free pivot.  Rows are divided by their content to keep entries small.  If
    ``limit`` is given the scan stops once the rank reaches it.
    """
    pivots = {}
    rank = 0
    for row in rows:
        row = {k: v for k, v in row.items() if v}
        while row:
            col = min(row)
            prow = pivots.get(col)
            if prow is None:
                pivots[col] = _normalize(row)
                rank += 1
                break
            a, b = prow[col], row[col]
            if a in (1, -1):
                f = b * a
                for k, v in prow.items():
                    nv = row.get(k, 0) - f * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
            else:
                g = gcd(a, b)
                a, b = a // g, b // g
                new = {k: a * v for k, v in row.items()}
                for k, v in prow.items():
                    nv = new.get(k, 0) - b * v
                    if nv:
                        new[k] = nv
                    else:
                        new.pop(k, None)
                row = _normalize(new) if new else new
        if limit is not None and rank >= limit:
            break
    return rank


def boundary_rows(faces, lower_index):
    """Sparse rows of the simplicial boundary of ``faces`` (bitmasks of one size)."""
    for face in faces:
        row = {}
        sign = 1
        rest = face
        while rest:
            low = rest & -rest
            row[lower_index[face ^ low]] = sign
            sign = -sign
            rest ^= low
        yield row


def reduced_homology(faces):
    """Reduced Betti numbers over Q of the simplicial complex with the given faces.

    ``faces`` lists every face as a bitmask, the empty face included (an empty
    list is the void complex, whose homology vanishes).  Returns
    ``{dimension: rank}`` with zero ranks omitted.
    """
    by_size = {}
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
    if not by_size:
        return {}
    top = max(by_size)
    index = {s: {f: k for k, f in enumerate(sorted(fs))} for s, fs in by_size.items()}
    counts = {s: len(fs) for s, fs in by_size.items()}
    # ranks[s] is the rank of the boundary from size-s faces to size-(s-1) faces
    ranks = {0: 0, top + 1: 0}
    for s in range(1, top + 1):
        if not counts.get(s) or not counts.get(s - 1):
            ranks[s] = 0
            continue
        # image of this boundary sits inside the kernel of the one below
        bound = counts[s - 1] - ranks[s - 1]
        ranks[s] = exact_rank(boundary_rows(sorted(by_size[s]), index[s - 1]), limit=bound)
    out = {}
    for s in range(0, top + 1):
        h = counts.get(s, 0) - ranks[s] - ranks[s + 1]
        if h:
            out[s - 1] = h
    return out
