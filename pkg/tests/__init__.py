"""Tests for goeritz-ob."""
