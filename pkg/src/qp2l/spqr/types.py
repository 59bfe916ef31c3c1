"""Catalog of embedding types for pertinent graphs.

A type name encodes, in order: the node type of the owning tree node
(RE/RF/BE/BP/BB/BF), whether the embedding has an internal red face
(I) or not (N), how many of the two outer faces are red (0/1/2), and a
trailing refinement letter where the family splits further. BP/BB use a
single digit that combines the caterpillar count of the auxiliary graph
with the internal-red-face flag; BE splits into slim/fat instead.
"""

NODE_EMB_TYPES = {
    "RE": ("RE",),
    "RF": ("RFN0A", "RFN0B", "RFN1A", "RFN1B", "RFN1C", "RFN1D", "RFN2",
           "RFI0", "RFI1A", "RFI1B", "RFI2"),
    "BE": ("BE_slim", "BE_fat"),
    "BP": ("BP1", "BP2", "BP3", "BP4", "BP5"),
    "BB": ("BB2", "BB3", "BB4", "BB5"),
    "BF": ("BFN0A", "BFN0B", "BFN1A", "BFN1B", "BFN1C", "BFN1D", "BFN2",
           "BFI0A", "BFI0B", "BFI1A", "BFI1B", "BFI1C", "BFI1D", "BFI1E",
           "BFI1F", "BFI1G", "BFI2A", "BFI2B"),
}

EMB_TYPES = tuple(t for ts in NODE_EMB_TYPES.values() for t in ts)

NODE_TYPE_OF = {t: nt for nt, ts in NODE_EMB_TYPES.items() for t in ts}


def caterpillar_count(t):
    """Number of connected components of the auxiliary graph (feature F1)."""
    if t == "BP1":
        return 0
    if t[:2] in ("BP", "BB") and t[2] in "35":
        return 2
    return 1


def outer_red_count(t):
    """Number of red outer faces (feature F2)."""
    if t == "RE" or t.startswith("BE"):
        return 0
    if t[:2] in ("BP", "BB"):
        k = int(t[2])
        return 0 if k == 1 else (1 if k in (2, 4) else 2)
    return int(t[3])


def has_internal_red(t):
    """Whether an internal red face exists (feature F3)."""
    if t == "RE" or t == "BE_slim":
        return False
    if t == "BE_fat":
        return True
    if t[:2] in ("BP", "BB"):
        return int(t[2]) >= 4
    return t[2] == "I"


# Types whose embeddings count as flipped toward both sides.
BOTH_FLIPPED = frozenset(
    {"RE", "BE_slim", "BE_fat", "RFN0A", "RFI0", "BP1", "BP3", "BFN0A"})
