"""Tests for prahmlab."""
