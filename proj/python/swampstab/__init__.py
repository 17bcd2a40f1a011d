"""Exact stability computations for decorated vector bundles on curves."""

try:
    from . import _swampstab as _impl  # installed layout
except ImportError:  # build-tree layout: extension next to the package dir
    import _swampstab as _impl

__all__ = [
    "DecorationForm",
    "DomainError",
    "Subspace",
    "TensorRepSpec",
    "WeightedFlag",
    "euler_p",
    "gamma_from_flag",
    "mu_bruteforce_oracle",
    "mu_tensor",
    "q_poly",
    "selftest",
    "stab_document",
    "walls_document",
]

for _name in __all__:
    globals()[_name] = getattr(_impl, _name)
del _name, _impl
