"""Frozen dictionary of plane gadgets, one per embedding type.

Each gadget is a small embedded pertinent graph (with the closing
marker path) whose classified type is its key. The solver splices
gadgets in place of virtual edges to test realizability of a
configuration; scripts/harvest_gadgets.py regenerates this file.
"""

MARKER = "#m"

GADGETS = {
    'RE': {
        "u": 'b0',
        "v": 'r0',
        "b_star": 'b0',
        "flip": ('l', 'r'),
        "rotation": {
            'b0': ('r0', '#m'),
            'r0': ('b0', '#m'),
            '#m': ('b0', 'r0'),
        },
    },
    'RFN0A': {
        "u": 'b0',
        "v": 'r0',
        "b_star": 'b2',
        "flip": ('l', 'r'),
        "rotation": {
            'b0': ('b1', 'r0', '#m'),
            'r0': ('b0', 'b2', 'b1', '#m'),
            'b1': ('b0', 'r0', 'b2'),
            'b2': ('b1', 'r0'),
            '#m': ('b0', 'r0'),
        },
    },
    'RFN0B': {
        "u": 'b0',
        "v": 'r0',
        "b_star": 'b1',
        "flip": ('l', 'r'),
        "rotation": {
            'b0': ('b1', '#m'),
            'r0': ('b1', '#m'),
            'b1': ('b0', 'r0'),
            '#m': ('b0', 'r0'),
        },
    },
    'RFN1A': {
        "u": 'b0',
        "v": 'r0',
        "b_star": 'b1',
        "flip": ('l',),
        "rotation": {
            'b0': ('b1', '#m'),
            'r0': ('b1', '#m'),
            'b1': ('b0', 'r0', 'r1'),
            'r1': ('b1',),
            '#m': ('b0', 'r0'),
        },
    },
    'RFN1B': {
        "u": 'b0',
        "v": 'r0',
        "b_star": 'b2',
        "flip": ('r',),
        "rotation": {
            'b0': ('b1', '#m'),
            'r0': ('b2', 'b1', '#m'),
            'b1': ('b0', 'r1', 'r0', 'b2'),
            'b2': ('b1', 'r0'),
            'r1': ('b1',),
            '#m': ('b0', 'r0'),
        },
    },
    'RFN1C': {
        "u": 'b0',
        "v": 'r0',
        "b_star": 'b1',
        "flip": ('r',),
        "rotation": {
            'b0': ('b1', 'r0', '#m'),
            'r0': ('b0', 'b1', '#m'),
            'b1': ('b0', 'r1', 'r0'),
            'r1': ('b1',),
            '#m': ('b0', 'r0'),
        },
    },
    'RFN1D': {
        "u": 'b0',
        "v": 'r0',
        "b_star": 'b2',
        "flip": ('r',),
        "rotation": {
            'b0': ('b1', 'r0', '#m'),
            'r0': ('b0', 'b2', 'b1', '#m'),
            'b1': ('b0', 'r1', 'r0', 'b2'),
            'b2': ('b1', 'r0'),
            'r1': ('b1',),
            '#m': ('b0', 'r0'),
        },
    },
    'RFN2': {
        "u": 'b0',
        "v": 'r0',
        "b_star": 'b1',
        "flip": ('l', 'r'),
        "rotation": {
            'b0': ('b1', 'r1', '#m'),
            'r0': ('b1', '#m'),
            'b1': ('b0', 'r2', 'r0', 'r1'),
            'r1': ('b0', 'b1'),
            'r2': ('b1',),
            '#m': ('b0', 'r0'),
        },
    },
    'RFI0': {
        "u": 'b0',
        "v": 'r0',
        "b_star": 'b1',
        "flip": ('l', 'r'),
        "rotation": {
            'b0': ('b1', 'r0', '#m'),
            'r0': ('b0', 'b1', '#m'),
            'b1': ('b0', 'r0', 'r1'),
            'r1': ('b1',),
            '#m': ('b0', 'r0'),
        },
    },
    'RFI1A': {
        "u": 'b0',
        "v": 'r0',
        "b_star": 'b1',
        "flip": ('l',),
        "rotation": {
            'b0': ('b1', 'r1', '#m'),
            'r0': ('b1', '#m'),
            'b1': ('b0', 'r0', 'r1', 'r2'),
            'r1': ('b0', 'b1'),
            'r2': ('b1',),
            '#m': ('b0', 'r0'),
        },
    },
    'RFI1B': {
        "u": 'b0',
        "v": 'r0',
        "b_star": 'b1',
        "flip": ('r',),
        "rotation": {
            'b0': ('b1', 'r1', 'r0', '#m'),
            'r0': ('b0', 'b1', '#m'),
            'b1': ('b0', 'r2', 'r0', 'r1'),
            'r1': ('b0', 'b1'),
            'r2': ('b1',),
            '#m': ('b0', 'r0'),
        },
    },
    'RFI2': {
        "u": 'b0',
        "v": 'r0',
        "b_star": 'b1',
        "flip": ('r',),
        "rotation": {
            'b0': ('r1', 'b1', 'r2', '#m'),
            'r0': ('b1', '#m'),
            'r1': ('b1', 'b0'),
            'b1': ('b0', 'r1', 'r0', 'r2', 'r3'),
            'r2': ('b1', 'b0'),
            'r3': ('b1',),
            '#m': ('b0', 'r0'),
        },
    },
    'BE_slim': {
        "u": 'b0',
        "v": 'b1',
        "b_star": None,
        "flip": ('l', 'r'),
        "rotation": {
            'b0': ('r0', '#m'),
            'b1': ('r0', '#m'),
            'r0': ('b0', 'b1'),
            '#m': ('b0', 'b1'),
        },
    },
    'BE_fat': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b1',
        "flip": ('l', 'r'),
        "rotation": {
            'b0': ('r0', 'r1', '#m'),
            'b1': ('r1', 'r0', '#m'),
            'r0': ('b0', 'b1'),
            'r1': ('b0', 'b1'),
            '#m': ('b0', 'b1'),
        },
    },
    'BP1': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b1',
        "flip": ('l', 'r'),
        "rotation": {
            'b0': ('b1', '#m'),
            'b1': ('b0', '#m'),
            '#m': ('b0', 'b1'),
        },
    },
    'BP2': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b1',
        "flip": ('l',),
        "rotation": {
            'b0': ('b1', 'r0', '#m'),
            'b1': ('r0', 'b0', '#m'),
            'r0': ('b0', 'b1'),
            '#m': ('b0', 'b1'),
        },
    },
    'BP3': {
        "u": 'b0',
        "v": 'b1',
        "b_star": None,
        "flip": ('l', 'r'),
        "rotation": {
            'b0': ('r0', 'b1', 'r1', '#m'),
            'b1': ('r1', 'b0', 'r0', '#m'),
            'r0': ('b0', 'b1'),
            'r1': ('b0', 'b1'),
            '#m': ('b0', 'b1'),
        },
    },
    'BP4': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b1',
        "flip": ('l',),
        "rotation": {
            'b0': ('b1', 'r0', 'r1', '#m'),
            'b1': ('r1', 'r0', 'b0', '#m'),
            'r0': ('b0', 'b1'),
            'r1': ('b0', 'b1'),
            '#m': ('b0', 'b1'),
        },
    },
    'BP5': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b1',
        "flip": ('r',),
        "rotation": {
            'b0': ('r0', 'b1', 'r1', 'r2', '#m'),
            'b1': ('r2', 'r1', 'b0', 'r0', '#m'),
            'r0': ('b1', 'b0'),
            'r1': ('b1', 'b0'),
            'r2': ('b1', 'b0'),
            '#m': ('b0', 'b1'),
        },
    },
    'BB2': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b2',
        "flip": ('l',),
        "rotation": {
            'b0': ('b1', 'r0', '#m'),
            'b1': ('b2', 'b0', '#m'),
            'r0': ('b2', 'b0'),
            'b2': ('b1', 'r0'),
            '#m': ('b0', 'b1'),
        },
    },
    'BB3': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b2',
        "flip": ('l',),
        "rotation": {
            'b0': ('r0', 'b1', 'r1', '#m'),
            'b1': ('b2', 'b0', 'r0', '#m'),
            'r0': ('b1', 'b0'),
            'r1': ('b0', 'b2'),
            'b2': ('b1', 'r1'),
            '#m': ('b0', 'b1'),
        },
    },
    'BB4': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b2',
        "flip": ('l',),
        "rotation": {
            'b0': ('b1', 'r0', '#m'),
            'b1': ('b2', 'b0', '#m'),
            'r0': ('b0', 'b2'),
            'b2': ('b1', 'r0', 'r1'),
            'r1': ('b2',),
            '#m': ('b0', 'b1'),
        },
    },
    'BB5': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b2',
        "flip": ('r',),
        "rotation": {
            'b0': ('r0', 'b1', 'r1', 'r2', '#m'),
            'b1': ('r2', 'b2', 'r1', 'b0', 'r0', '#m'),
            'r0': ('b1', 'b0'),
            'r1': ('b1', 'b2', 'b0'),
            'r2': ('b1', 'b0', 'b2'),
            'b2': ('b1', 'r2', 'r1'),
            '#m': ('b0', 'b1'),
        },
    },
    'BFN0A': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b3',
        "flip": ('l', 'r'),
        "rotation": {
            'b0': ('r0', '#m'),
            'b1': ('b2', 'r0', '#m'),
            'r0': ('b2', 'b0', 'b1', 'b3'),
            'b2': ('b1', 'r0', 'b3'),
            'b3': ('b2', 'r0'),
            '#m': ('b0', 'b1'),
        },
    },
    'BFN0B': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b2',
        "flip": ('l', 'r'),
        "rotation": {
            'b0': ('r0', '#m'),
            'b1': ('b2', '#m'),
            'r0': ('b0', 'b2'),
            'b2': ('b1', 'r0'),
            '#m': ('b0', 'b1'),
        },
    },
    'BFN1A': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b2',
        "flip": ('r',),
        "rotation": {
            'b0': ('r0', '#m'),
            'b1': ('b2', '#m'),
            'r0': ('b0', 'b2'),
            'b2': ('b1', 'r0', 'r1'),
            'r1': ('b2',),
            '#m': ('b0', 'b1'),
        },
    },
    'BFN1B': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b3',
        "flip": ('r',),
        "rotation": {
            'b0': ('r0', '#m'),
            'b1': ('b2', 'r1', '#m'),
            'r0': ('b0', 'b2', 'b3'),
            'b2': ('b1', 'b3', 'r0', 'r2', 'r1'),
            'r1': ('b1', 'b2'),
            'b3': ('b2', 'r0'),
            'r2': ('b2',),
            '#m': ('b0', 'b1'),
        },
    },
    'BFN1C': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b2',
        "flip": ('l',),
        "rotation": {
            'b0': ('r0', '#m'),
            'b1': ('b2', 'r0', '#m'),
            'r0': ('b0', 'b1', 'b2'),
            'b2': ('b1', 'r1', 'r0'),
            'r1': ('b2',),
            '#m': ('b0', 'b1'),
        },
    },
    'BFN1D': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b3',
        "flip": ('l',),
        "rotation": {
            'b0': ('r0', '#m'),
            'b1': ('b2', 'r0', '#m'),
            'r0': ('b0', 'b1', 'b3', 'b2'),
            'b2': ('b1', 'r1', 'r0', 'b3'),
            'b3': ('b2', 'r0'),
            'r1': ('b2',),
            '#m': ('b0', 'b1'),
        },
    },
    'BFN2': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b2',
        "flip": ('l', 'r'),
        "rotation": {
            'b0': ('r0', '#m'),
            'b1': ('b2', 'r1', '#m'),
            'r0': ('b2', 'b0'),
            'b2': ('b1', 'r2', 'r0', 'r1'),
            'r1': ('b1', 'b2'),
            'r2': ('b2',),
            '#m': ('b0', 'b1'),
        },
    },
    'BFI0A': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b2',
        "flip": ('l', 'r'),
        "rotation": {
            'b0': ('r0', 'r1', '#m'),
            'b1': ('b2', '#m'),
            'r0': ('b0', 'b2'),
            'r1': ('b0', 'b2'),
            'b2': ('b1', 'r1', 'r0'),
            '#m': ('b0', 'b1'),
        },
    },
    'BFI0B': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b2',
        "flip": ('l', 'r'),
        "rotation": {
            'b0': ('r0', '#m'),
            'b1': ('b2', 'r0', '#m'),
            'r0': ('b0', 'b1', 'b2'),
            'b2': ('b1', 'r0', 'r1'),
            'r1': ('b2',),
            '#m': ('b0', 'b1'),
        },
    },
    'BFI1A': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b2',
        "flip": ('r',),
        "rotation": {
            'b0': ('r0', 'r1', '#m'),
            'b1': ('b2', 'r2', '#m'),
            'r0': ('b2', 'b0'),
            'r1': ('b2', 'b0'),
            'b2': ('b1', 'r1', 'r0', 'r2'),
            'r2': ('b2', 'b1'),
            '#m': ('b0', 'b1'),
        },
    },
    'BFI1B': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b3',
        "flip": ('r',),
        "rotation": {
            'b0': ('r0', 'r1', '#m'),
            'b1': ('b2', 'r2', '#m'),
            'r0': ('b2', 'b0'),
            'r1': ('b3', 'b0'),
            'b2': ('b3', 'r0', 'r2', 'b1'),
            'r2': ('b2', 'b1'),
            'b3': ('b2', 'r1', 'r3'),
            'r3': ('b3',),
            '#m': ('b0', 'b1'),
        },
    },
    'BFI1C': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b3',
        "flip": ('l',),
        "rotation": {
            'b0': ('r0', 'r1', '#m'),
            'b1': ('b2', 'r0', '#m'),
            'r0': ('b1', 'b2', 'b3', 'b0'),
            'r1': ('b2', 'b0'),
            'b2': ('b1', 'r2', 'r1', 'b3', 'r0'),
            'b3': ('b2', 'r0'),
            'r2': ('b2',),
            '#m': ('b0', 'b1'),
        },
    },
    'BFI1D': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b2',
        "flip": ('l',),
        "rotation": {
            'b0': ('r0', 'r1', '#m'),
            'b1': ('b2', 'r1', 'r0', '#m'),
            'r0': ('b1', 'b0'),
            'r1': ('b2', 'b0', 'b1'),
            'b2': ('b1', 'r2', 'r1'),
            'r2': ('b2',),
            '#m': ('b0', 'b1'),
        },
    },
    'BFI1E': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b2',
        "flip": ('l',),
        "rotation": {
            'b0': ('r0', 'r1', '#m'),
            'b1': ('b2', 'r0', '#m'),
            'r0': ('b0', 'b1'),
            'r1': ('b2', 'b0'),
            'b2': ('b1', 'r2', 'r1'),
            'r2': ('b2',),
            '#m': ('b0', 'b1'),
        },
    },
    'BFI1F': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b2',
        "flip": ('r',),
        "rotation": {
            'b0': ('r0', '#m'),
            'b1': ('b2', 'r1', '#m'),
            'r0': ('b2', 'b0'),
            'b2': ('b1', 'r0', 'r1', 'r2'),
            'r1': ('b1', 'b2'),
            'r2': ('b2',),
            '#m': ('b0', 'b1'),
        },
    },
    'BFI1G': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b2',
        "flip": ('l',),
        "rotation": {
            'b0': ('r0', '#m'),
            'b1': ('b2', 'r1', 'r0', '#m'),
            'r0': ('b0', 'b1', 'b2'),
            'b2': ('b1', 'r2', 'r0', 'r1'),
            'r1': ('b1', 'b2'),
            'r2': ('b2',),
            '#m': ('b0', 'b1'),
        },
    },
    'BFI2A': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b3',
        "flip": ('l', 'r'),
        "rotation": {
            'b0': ('r0', 'r1', '#m'),
            'b1': ('b2', 'r2', '#m'),
            'r0': ('b0', 'b3'),
            'r1': ('b0', 'b2'),
            'b2': ('b1', 'r3', 'r1', 'b3'),
            'r2': ('b1', 'b3'),
            'b3': ('b2', 'r0', 'r2'),
            'r3': ('b2',),
            '#m': ('b0', 'b1'),
        },
    },
    'BFI2B': {
        "u": 'b0',
        "v": 'b1',
        "b_star": 'b3',
        "flip": ('r',),
        "rotation": {
            'b0': ('r0', '#m'),
            'b1': ('b2', '#m'),
            'r0': ('b0', 'b2', 'b3'),
            'b2': ('b1', 'r1', 'b3', 'r0', 'r2'),
            'b3': ('b2', 'r3', 'r1', 'r0'),
            'r1': ('b2', 'b3'),
            'r2': ('b2',),
            'r3': ('b3',),
            '#m': ('b0', 'b1'),
        },
    },
}
