#include "ores/ops/inversion.hpp"

#include <Eigen/SparseCholesky>
#include <cmath>
#include <sstream>

#include "ores/error.hpp"

namespace ores {

InversionResult invert_one_plus_AstarA(const BandedOperator& a, const Eigen::VectorXcd& y,
                                       const InversionOptions& options) {
  return invert_positive(one_plus_star(a), y, options);
}

InversionResult invert_positive(const BandedOperator& b, const Eigen::VectorXcd& y,
                                const InversionOptions& options) {
  if (!(options.tol > 0)) throw std::invalid_argument("tolerance must be positive");
  InversionResult r;
  const std::size_t len = static_cast<std::size_t>(y.size());
  std::size_t n = std::max<std::size_t>(16, 2 * (len + static_cast<std::size_t>(b.bandwidth())));
  while (n <= options.max_truncation) {
    const auto m = b.truncation(static_cast<long>(n));
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<std::complex<double>>, Eigen::Lower,
                          Eigen::NaturalOrdering<int>>
        solver(m);
    if (solver.info() != Eigen::Success) throw std::runtime_error("truncated system is singular");
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
    rhs.head(y.size()) = y;
    Eigen::VectorXcd x = solver.solve(rhs);
    const double residual = distance(b.apply(x), y);
    r.history.emplace_back(n, residual);
    if (residual <= options.tol) {
      r.x = std::move(x);
      r.residual = residual;
      r.truncation_size = n;
      return r;
    }
    n *= 2;
  }
  std::ostringstream msg;
  msg << "residual " << (r.history.empty() ? NAN : r.history.back().second) << " above tolerance "
      << options.tol << " at truncation " << n / 2;
  throw TruncationLimit(msg.str());
}

}  // namespace ores
