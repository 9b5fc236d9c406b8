"""Figure rendering for the fault inversion pipeline's CSV artifacts."""
from .figures import (render_c_marginal, render_fixed_c, render_forcing,
                      render_marginal_overlay, render_surface_disp)
from .schema import SchemaError, read_data, read_marginal, read_true_model

__all__ = ["SchemaError", "read_data", "read_marginal", "read_true_model",
           "render_c_marginal", "render_fixed_c", "render_forcing",
           "render_marginal_overlay", "render_surface_disp"]

__version__ = "0.1.0"
