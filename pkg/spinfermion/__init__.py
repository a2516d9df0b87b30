"""spinfermion - exact mapping between half-integer spins and fermion flavors."""

__version__ = "1.0.0"
__app_name__ = "spinfermion"
