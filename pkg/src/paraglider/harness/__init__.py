"""Verification campaigns and the command line interface."""

from .campaigns import (
    CampaignReport,
    atlas_dump,
    check_graph,
    cmd_check,
    cmd_color,
    cmd_family,
    cmd_sweep,
    cmd_sweep_random,
    cmd_verify_base,
    corpus_lines,
    resolve_graph,
)
from .cli import main
