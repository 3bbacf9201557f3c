"""Bitset kernels for the hull and the face lattice.

Every kernel has a compiled loop version and a vectorised numpy version with
the same contract.  Sets are rows of ``uint64`` words; bit ``i`` of word
``i // 64`` marks element ``i``.
"""
from __future__ import annotations

import numpy as np

from .._accel import backend, njit, prange

WORD = 64


def to_bitsets(mask: np.ndarray) -> np.ndarray:
    """Pack a boolean ``(rows, m)`` matrix into ``(rows, ceil(m / 64))`` words."""
    mask = np.atleast_2d(np.asarray(mask, dtype=bool))
    rows, m = mask.shape
    words = max(1, -(-m // WORD))
    padded = np.zeros((rows, words * WORD), dtype=np.uint64)
    padded[:, :m] = mask
    weights = np.left_shift(np.uint64(1), np.arange(WORD, dtype=np.uint64))
    return (padded.reshape(rows, words, WORD) * weights).sum(axis=2, dtype=np.uint64)


def from_bitsets(bits: np.ndarray, m: int) -> np.ndarray:
    bits = np.atleast_2d(bits)
    shifts = np.arange(WORD, dtype=np.uint64)
    expanded = (bits[:, :, None] >> shifts) & np.uint64(1)
    return expanded.reshape(bits.shape[0], -1)[:, :m].astype(bool)


def popcount_rows(bits: np.ndarray) -> np.ndarray:
    return np.bitwise_count(bits).sum(axis=-1, dtype=np.int64)


# ---------------------------------------------------------------- adjacency

@njit(cache=True)
def _popcount64(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@njit(cache=True)
def _adjacent_pairs_jit(tight, pos, neg, min_common):
    nrays, words = tight.shape
    out = np.empty((pos.size * neg.size, 2), dtype=np.int64)
    common = np.empty(words, dtype=np.uint64)
    k = 0
    for a in range(pos.size):
        p = pos[a]
        for b in range(neg.size):
            q = neg[b]
            cnt = 0
            for w in range(words):
                common[w] = tight[p, w] & tight[q, w]
                cnt += _popcount64(common[w])
            if cnt < min_common:
                continue
            ok = True
            for r in range(nrays):
                if r == p or r == q:
                    continue
                inside = True
                for w in range(words):
                    if tight[r, w] & common[w] != common[w]:
                        inside = False
                        break
                if inside:
                    ok = False
                    break
            if ok:
                out[k, 0] = p
                out[k, 1] = q
                k += 1
    return out[:k]


def _adjacent_pairs_numpy(tight, pos, neg, min_common):
    found = []
    for p in pos:
        common = tight[p] & tight[neg]
        cand = popcount_rows(common) >= min_common
        if not cand.any():
            continue
        common, qs = common[cand], neg[cand]
        contains = ((tight[None, :, :] & common[:, None, :]) == common[:, None, :]).all(axis=2)
        ok = contains.sum(axis=1) == 2
        found.extend((p, q) for q in qs[ok])
    return np.array(found, dtype=np.int64).reshape(-1, 2)


def adjacent_pairs(tight, pos, neg, min_common, which: str | None = None) -> np.ndarray:
    """Pairs ``(p, q)`` with ``p`` in ``pos`` and ``q`` in ``neg`` that span a 2-face.

    Combinatorial test of double description: the common tight set has at
    least ``min_common`` elements and lies in no third ray's tight set.
    """
    tight = np.ascontiguousarray(tight, dtype=np.uint64)
    pos = np.asarray(pos, dtype=np.int64)
    neg = np.asarray(neg, dtype=np.int64)
    if (which or backend()) == "numba":
        return _adjacent_pairs_jit(tight, pos, neg, min_common)
    return _adjacent_pairs_numpy(tight, pos, neg, min_common)


# ---------------------------------------------------------------- face lattice

@njit(cache=True, parallel=True)
def _subfaces_jit(faces, facets):
    nf, words = faces.shape
    nh = facets.shape[0]
    out = np.zeros((nf * nh, words), dtype=np.uint64)
    keep = np.zeros(nf * nh, dtype=np.bool_)
    for i in prange(nf):
        base = i * nh
        for h in range(nh):
            empty = True
            same = True
            for w in range(words):
                x = faces[i, w] & facets[h, w]
                out[base + h, w] = x
                if x != 0:
                    empty = False
                if x != faces[i, w]:
                    same = False
            keep[base + h] = not empty and not same
        for h in range(nh):
            if not keep[base + h]:
                continue
            for g in range(nh):
                if g == h or not keep[base + g]:
                    continue
                sub = True
                equal = True
                for w in range(words):
                    x = out[base + h, w]
                    y = out[base + g, w]
                    if x & y != x:
                        sub = False
                        break
                    if x != y:
                        equal = False
                if sub and not equal:
                    keep[base + h] = False
                    break
    return out[keep]


def _subfaces_numpy(faces, facets, chunk: int = 1024):
    parts = []
    for start in range(0, faces.shape[0], chunk):
        f = faces[start:start + chunk]
        inter = f[:, None, :] & facets[None, :, :]
        valid = (inter != 0).any(axis=2) & (inter != f[:, None, :]).any(axis=2)
        a, b = inter[:, :, None, :], inter[:, None, :, :]
        strict = ((a & b) == a).all(axis=3) & (a != b).any(axis=3)
        strict &= valid[:, None, :]
        maximal = valid & ~strict.any(axis=2)
        parts.append(inter[maximal])
    if not parts:
        return np.zeros((0, faces.shape[1]), dtype=np.uint64)
    return np.concatenate(parts)


def subfaces(faces, facets, which: str | None = None) -> np.ndarray:
    """All facets of the given faces, deduplicated and sorted.

    A facet of a face ``F`` is an inclusion-maximal set ``F & H`` over the
    polytope facets ``H`` with ``F & H`` neither empty nor ``F`` itself.
    """
    faces = np.ascontiguousarray(faces, dtype=np.uint64)
    facets = np.ascontiguousarray(facets, dtype=np.uint64)
    if (which or backend()) == "numba":
        raw = _subfaces_jit(faces, facets)
    else:
        raw = _subfaces_numpy(faces, facets)
    return unique_rows(raw.reshape(-1, faces.shape[1]))


def unique_rows(bits: np.ndarray) -> np.ndarray:
    """Sorted distinct rows of a bitset matrix."""
    if bits.shape[0] == 0:
        return bits
    if bits.shape[1] == 1:
        return np.unique(bits[:, 0])[:, None]
    bits = bits[np.lexsort(bits.T[::-1])]
    keep = np.ones(bits.shape[0], dtype=bool)
    keep[1:] = (bits[1:] != bits[:-1]).any(axis=1)
    return bits[keep]
