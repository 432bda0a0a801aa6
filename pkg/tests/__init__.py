# Tests for displacement_calculus
