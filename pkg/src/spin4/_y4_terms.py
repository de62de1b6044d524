"""Monomials of the explicit y4(a, b) evaluation on a 4-simplex (01234).

Every factor is a face containing vertex 4; cocycle values on the other
faces are determined by these.  Grouped by (a-degree, b-degree)."""

Y4_TERMS = {
    "ab": [
        "a(014)b(234)", "a(024)b(234)", "a(124)b(234)", "a(014)b(014)",
        "a(024)b(024)", "a(034)b(014)", "a(124)b(124)", "a(134)b(014)",
    ],
    "aab": [
        "a(014)a(024)b(234)", "a(014)a(034)b(024)", "a(014)a(034)b(034)", "a(014)a(034)b(124)",
        "a(014)a(034)b(234)", "a(014)a(124)b(134)", "a(014)a(124)b(234)", "a(014)a(134)b(124)",
        "a(014)a(134)b(134)", "a(014)a(134)b(234)", "a(014)a(234)b(134)", "a(014)a(234)b(234)",
        "a(024)a(034)b(034)", "a(024)a(034)b(124)", "a(024)a(134)b(124)", "a(024)a(134)b(234)",
        "a(024)a(234)b(234)", "a(034)a(124)b(014)", "a(034)a(124)b(024)", "a(034)a(124)b(124)",
        "a(034)a(124)b(134)", "a(034)a(124)b(234)", "a(034)a(134)b(014)", "a(034)a(134)b(034)",
        "a(034)a(234)b(014)", "a(034)a(234)b(034)", "a(034)a(234)b(134)", "a(124)a(134)b(124)",
    ],
    "abb": [
        "a(014)b(014)b(234)", "a(014)b(024)b(034)", "a(014)b(024)b(234)", "a(014)b(034)b(124)",
        "a(014)b(034)b(134)", "a(014)b(124)b(134)", "a(014)b(124)b(234)", "a(014)b(134)b(234)",
        "a(024)b(014)b(134)", "a(024)b(024)b(034)", "a(024)b(024)b(234)", "a(024)b(034)b(124)",
        "a(024)b(034)b(134)", "a(024)b(124)b(134)", "a(024)b(124)b(234)", "a(024)b(134)b(234)",
        "a(034)b(014)b(024)", "a(034)b(014)b(034)", "a(034)b(014)b(134)", "a(034)b(024)b(034)",
        "a(034)b(024)b(124)", "a(034)b(034)b(124)", "a(124)b(014)b(134)", "a(124)b(014)b(234)",
        "a(124)b(034)b(124)", "a(124)b(034)b(134)", "a(124)b(034)b(234)", "a(134)b(014)b(024)",
        "a(134)b(014)b(034)", "a(134)b(014)b(134)", "a(134)b(014)b(234)", "a(134)b(024)b(034)",
        "a(134)b(024)b(124)", "a(134)b(024)b(234)", "a(134)b(034)b(124)", "a(234)b(014)b(234)",
    ],
    "aaab": [
        "a(014)a(024)a(234)b(014)", "a(014)a(024)a(234)b(024)", "a(014)a(024)a(234)b(234)", "a(014)a(034)a(234)b(024)",
        "a(014)a(034)a(234)b(034)", "a(014)a(034)a(234)b(234)", "a(014)a(124)a(234)b(124)", "a(024)a(034)a(234)b(024)",
        "a(024)a(034)a(234)b(034)", "a(024)a(034)a(234)b(234)", "a(024)a(124)a(234)b(014)", "a(024)a(124)a(234)b(024)",
        "a(024)a(124)a(234)b(124)", "a(024)a(124)a(234)b(234)", "a(034)a(124)a(234)b(024)", "a(034)a(124)a(234)b(034)",
        "a(034)a(124)a(234)b(234)",
    ],
    "aabb": [
        "a(014)a(024)b(014)b(134)", "a(014)a(024)b(024)b(234)", "a(014)a(024)b(034)b(124)", "a(014)a(024)b(034)b(134)",
        "a(014)a(024)b(034)b(234)", "a(014)a(024)b(124)b(134)", "a(014)a(024)b(124)b(234)", "a(014)a(024)b(134)b(234)",
        "a(014)a(034)b(014)b(134)", "a(014)a(034)b(024)b(234)", "a(014)a(034)b(034)b(234)", "a(014)a(124)b(014)b(134)",
        "a(014)a(124)b(014)b(234)", "a(014)a(124)b(034)b(124)", "a(014)a(124)b(034)b(134)", "a(014)a(124)b(034)b(234)",
        "a(014)a(124)b(124)b(134)", "a(014)a(124)b(124)b(234)", "a(014)a(124)b(134)b(234)", "a(014)a(134)b(014)b(124)",
        "a(014)a(134)b(014)b(234)", "a(014)a(134)b(034)b(124)", "a(014)a(134)b(034)b(134)", "a(014)a(134)b(034)b(234)",
        "a(014)a(234)b(014)b(234)", "a(014)a(234)b(024)b(234)", "a(014)a(234)b(124)b(234)", "a(024)a(034)b(014)b(024)",
        "a(024)a(034)b(014)b(034)", "a(024)a(034)b(014)b(124)", "a(024)a(034)b(014)b(134)", "a(024)a(034)b(024)b(034)",
        "a(024)a(034)b(024)b(124)", "a(024)a(034)b(024)b(234)", "a(024)a(034)b(034)b(134)", "a(024)a(034)b(124)b(134)",
        "a(024)a(034)b(124)b(234)", "a(024)a(034)b(134)b(234)", "a(024)a(124)b(014)b(234)", "a(024)a(124)b(024)b(234)",
        "a(024)a(124)b(124)b(234)", "a(024)a(134)b(014)b(124)", "a(024)a(134)b(014)b(134)", "a(024)a(134)b(014)b(234)",
        "a(024)a(134)b(034)b(124)", "a(024)a(134)b(034)b(134)", "a(024)a(134)b(034)b(234)", "a(024)a(134)b(124)b(134)",
        "a(024)a(134)b(134)b(234)", "a(024)a(234)b(014)b(234)", "a(024)a(234)b(124)b(234)", "a(034)a(124)b(014)b(124)",
        "a(034)a(124)b(014)b(134)", "a(034)a(124)b(014)b(234)", "a(034)a(124)b(024)b(234)", "a(034)a(124)b(034)b(124)",
        "a(034)a(124)b(034)b(134)", "a(034)a(124)b(124)b(134)", "a(034)a(124)b(134)b(234)", "a(034)a(134)b(014)b(124)",
        "a(034)a(134)b(014)b(134)", "a(034)a(134)b(014)b(234)", "a(034)a(134)b(034)b(124)", "a(034)a(134)b(034)b(134)",
        "a(034)a(134)b(034)b(234)", "a(034)a(134)b(124)b(134)", "a(034)a(134)b(134)b(234)", "a(124)a(134)b(014)b(124)",
        "a(124)a(134)b(014)b(134)", "a(124)a(134)b(014)b(234)", "a(124)a(134)b(034)b(124)", "a(124)a(134)b(034)b(134)",
        "a(124)a(134)b(034)b(234)", "a(124)a(134)b(124)b(134)", "a(124)a(134)b(124)b(234)", "a(124)a(134)b(134)b(234)",
        "a(124)a(234)b(014)b(234)", "a(124)a(234)b(024)b(234)",
    ],
    "abbb": [
        "a(014)b(014)b(124)b(234)", "a(014)b(024)b(124)b(234)", "a(034)b(014)b(024)b(234)", "a(034)b(014)b(034)b(234)",
        "a(034)b(024)b(034)b(234)", "a(034)b(024)b(124)b(234)", "a(034)b(034)b(124)b(234)",
    ],
}
