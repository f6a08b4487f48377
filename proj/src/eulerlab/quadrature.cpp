#include "eulerlab/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <memory>

#include "eulerlab/error.hpp"

namespace eulerlab {

GaussLegendre::GaussLegendre(int n) {
  if (n < 1) fail(ErrorKind::Param, "quadrature order must be positive");
  std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)>
      table(gsl_integration_glfixed_table_alloc(static_cast<size_t>(n)),
            &gsl_integration_glfixed_table_free);
  if (!table) fail(ErrorKind::Param, "cannot build a Gauss-Legendre rule of this order");
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    gsl_integration_glfixed_point(-1.0, 1.0, static_cast<size_t>(i), &nodes[i], &weights[i],
                                  table.get());
  }
}

}  // namespace eulerlab
