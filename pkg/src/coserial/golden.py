"""Hand-encoded Auslander-Reiten quivers used as golden references.

Node "k,v" is soc^k E_v (k = 1 is the simple at v). Arrows are irreducible
maps; "tau" pairs map X to tau(X). Written out by hand from the mesh
pictures, not generated.
"""

# Line infinite in both directions, window -2..2, levels 1..3.
# Predecessor of v is v-1.
BIINFINITE_W2_D3 = {
    "nodes": [
        "1,-2", "1,-1", "1,0", "1,1", "1,2",
        "2,-2", "2,-1", "2,0", "2,1", "2,2",
        "3,-2", "3,-1", "3,0", "3,1", "3,2",
    ],
    "arrows": [
        ("1,-2", "2,-2"), ("1,-1", "2,-1"), ("1,0", "2,0"), ("1,1", "2,1"), ("1,2", "2,2"),
        ("2,-2", "3,-2"), ("2,-1", "3,-1"), ("2,0", "3,0"), ("2,1", "3,1"), ("2,2", "3,2"),
        ("2,-1", "1,-2"), ("2,0", "1,-1"), ("2,1", "1,0"), ("2,2", "1,1"),
        ("3,-1", "2,-2"), ("3,0", "2,-1"), ("3,1", "2,0"), ("3,2", "2,1"),
    ],
    "tau": [
        ("1,-2", "1,-1"), ("1,-1", "1,0"), ("1,0", "1,1"), ("1,1", "1,2"),
        ("2,-2", "2,-1"), ("2,-1", "2,0"), ("2,0", "2,1"), ("2,1", "2,2"),
        ("3,-2", "3,-1"), ("3,-1", "3,0"), ("3,0", "3,1"), ("3,1", "3,2"),
    ],
}

# Line with a sink and no source, window 3 -> 2 -> 1 -> 0, levels 1..3.
# Predecessor of v is v+1; vertex 0 is the boundary of the wedge.
LEFTINFINITE_W3_D3 = {
    "nodes": [
        "1,0", "1,1", "1,2", "1,3",
        "2,0", "2,1", "2,2", "2,3",
        "3,0", "3,1", "3,2", "3,3",
    ],
    "arrows": [
        ("1,0", "2,0"), ("1,1", "2,1"), ("1,2", "2,2"), ("1,3", "2,3"),
        ("2,0", "3,0"), ("2,1", "3,1"), ("2,2", "3,2"), ("2,3", "3,3"),
        ("2,0", "1,1"), ("2,1", "1,2"), ("2,2", "1,3"),
        ("3,0", "2,1"), ("3,1", "2,2"), ("3,2", "2,3"),
    ],
    "tau": [
        ("1,1", "1,0"), ("1,2", "1,1"), ("1,3", "1,2"),
        ("2,1", "2,0"), ("2,2", "2,1"), ("2,3", "2,2"),
        ("3,1", "3,0"), ("3,2", "3,1"), ("3,3", "3,2"),
    ],
}

# Crowns with arrows i+1 -> i and 1 -> n, levels 1..3.
CROWN_1_D3 = {
    "nodes": ["1,1", "2,1", "3,1"],
    "arrows": [
        ("1,1", "2,1"), ("2,1", "3,1"),
        ("2,1", "1,1"), ("3,1", "2,1"),
    ],
    "tau": [("1,1", "1,1"), ("2,1", "2,1"), ("3,1", "3,1")],
}

CROWN_2_D3 = {
    "nodes": ["1,1", "1,2", "2,1", "2,2", "3,1", "3,2"],
    "arrows": [
        ("1,1", "2,1"), ("1,2", "2,2"), ("2,1", "3,1"), ("2,2", "3,2"),
        ("2,1", "1,2"), ("2,2", "1,1"),
        ("3,1", "2,2"), ("3,2", "2,1"),
    ],
    "tau": [
        ("1,1", "1,2"), ("1,2", "1,1"),
        ("2,1", "2,2"), ("2,2", "2,1"),
        ("3,1", "3,2"), ("3,2", "3,1"),
    ],
}

CROWN_3_D3 = {
    "nodes": ["1,1", "1,2", "1,3", "2,1", "2,2", "2,3", "3,1", "3,2", "3,3"],
    "arrows": [
        ("1,1", "2,1"), ("1,2", "2,2"), ("1,3", "2,3"),
        ("2,1", "3,1"), ("2,2", "3,2"), ("2,3", "3,3"),
        ("2,1", "1,2"), ("2,2", "1,3"), ("2,3", "1,1"),
        ("3,1", "2,2"), ("3,2", "2,3"), ("3,3", "2,1"),
    ],
    "tau": [
        ("1,2", "1,1"), ("1,3", "1,2"), ("1,1", "1,3"),
        ("2,2", "2,1"), ("2,3", "2,2"), ("2,1", "2,3"),
        ("3,2", "3,1"), ("3,3", "3,2"), ("3,1", "3,3"),
    ],
}

# Line 1 -> 2 -> 3, every indecomposable.
LINE_3 = {
    "nodes": ["1,1", "1,2", "1,3", "2,2", "2,3", "3,3"],
    "arrows": [
        ("1,2", "2,2"), ("1,3", "2,3"), ("2,3", "3,3"),
        ("2,2", "1,1"), ("2,3", "1,2"), ("3,3", "2,2"),
    ],
    "tau": [("1,2", "1,3"), ("1,1", "1,2"), ("2,2", "2,3")],
}
