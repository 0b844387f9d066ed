from ._core import certify, embeds, group, maximal_groups, pauli

__all__ = ["certify", "embeds", "group", "maximal_groups", "pauli"]
