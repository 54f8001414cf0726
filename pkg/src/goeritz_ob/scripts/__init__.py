"""CLI scripts for goeritz-ob."""
