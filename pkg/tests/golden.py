"""Shared golden fixtures: the two-unit worked example and its expected values."""

TWO_UNIT_CSV = "name,S,P,C\nA,100,100,1000\nB,100,200,1500\n"
TWO_UNIT_HCA_CSV = "name,S,P,C,HCA\nA,100,100,1000,10\nB,100,200,1500,15\n"

# Per-indicator expected values (label, unit A, unit B) on the citations basis.
CITATION_VALUES = (
    ("S", 100.0, 100.0),
    ("P", 100.0, 200.0),
    ("i", 10.0, 7.5),
    ("outcome", 1000.0, 1500.0),
    ("X", 10000.0, 11250.0),
    ("P/S", 1.0, 2.0),
    ("outcome/S", 10.0, 15.0),
    ("X/S", 100.0, 112.5),
)

# Same units evaluated on the highly-cited-article basis (HCA 10 and 15).
HCA_VALUES = (
    ("S", 100.0, 100.0),
    ("P", 100.0, 200.0),
    ("i", 0.1, 0.075),
    ("outcome", 10.0, 15.0),
    ("X", 1.0, 1.125),
    ("P/S", 1.0, 2.0),
    ("outcome/S", 0.1, 0.15),
    ("X/S", 0.01, 0.01125),
)

# Percentage advantage of B over A, identical on both bases.
ADVANTAGES = (0.0, 100.0, -25.0, 50.0, 12.5, 100.0, 50.0, 12.5)

QUANTITY_LABELS = ("S", "P", "outcome", "X")
QUALITY_LABELS = ("i", "P/S", "outcome/S", "X/S")
