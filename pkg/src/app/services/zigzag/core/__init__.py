"""Integer linear algebra, simplicial complexes, covers and the Čech zig-zag."""
