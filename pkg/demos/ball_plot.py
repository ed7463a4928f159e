# Write the reduced norm ball of the sample link as an SVG.
import sys

from splicenorm import l_en
from splicenorm.svg import render_ball_svg

out = sys.argv[1] if len(sys.argv) > 1 else "l_en_ball.svg"
with open(out, "w") as fh:
    fh.write(render_ball_svg(l_en()))
print("wrote", out)
