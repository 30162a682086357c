"""Jellyfish: Stanley decompositions for modules of covariants."""
