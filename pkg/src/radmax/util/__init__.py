from .visualization import construction_dot, profile_dot
