#!/usr/bin/env python3
"""Sample a rational parametrization to a Wavefront-style mesh.

Builds the cone over a rational circle, writes cone.obj on a 20x20 exact
rational grid, and shows pole skipping on a map with a singular line.
"""

from devsurf.cli import main

print("cone over the rational unit circle -> cone.obj")
main(
    [
        "mesh",
        "( s*(1-t^2)/(1+t^2), s*2*t/(1+t^2), s )",
        "--s", "0:1",
        "--t", "-3:3",
        "--res", "20",
        "--out", "cone.obj",
    ]
)

print("map with a pole line t = 1 (skipped grid points are reported):")
main(
    [
        "mesh",
        "( 1/((t-1)^2), s, s+t )",
        "--s", "0:1",
        "--t", "-3:3",
        "--res", "4",
        "--out", "poles.obj",
    ]
)
