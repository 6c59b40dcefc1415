"""Experiment runner, statistics and the command line interface."""
