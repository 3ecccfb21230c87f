"""Check every inequality behind the reconstruction, one shape at a time.

The barrier family a x^2 + b/(c + x^2) has g(y) = a y + b/(c + y), which is
convex for all positive parameters but increasing only when b <= a c^2.
Below that line the shape is a double well and the upper bound can fail;
the report shows which link of the chain breaks.
"""

from specinv import OscBarrier, PotentialShape, default_coupling_grid, validate_transform
from specinv.checks import run_checks

for abc in ((1, 1, 1), (2, 0.5, 1), (0.5, 2, 0.5)):
    g = OscBarrier(*abc)
    report = validate_transform(g)
    print(f"a,b,c = {abc}: transform {report.describe()}")
    for result in run_checks(PotentialShape(g), default_coupling_grid()):
        print("   ", result.line())
