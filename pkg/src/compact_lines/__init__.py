"""Order-theoretic machinery for zero-dimensional compact lines, at desk scale."""
