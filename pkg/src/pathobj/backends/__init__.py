"""Path object categories: the shared interface and its three instances."""

from .base import El, Model, Mor, const_elem, m_apply, strength_mor

__all__ = ["El", "Model", "Mor", "const_elem", "m_apply", "strength_mor"]
