#include <cstdio>
#include <sstream>

#include "ores/io/formats.hpp"

namespace ores {

namespace {

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0 ? 0.0 : x);
  return buf;
}

std::string entry(std::complex<double> z) {
  if (z.imag() == 0) return number(z.real());
  return number(z.real()) + (z.imag() < 0 ? "" : "+") + number(z.imag()) + "i";
}

}  // namespace

std::string gns_to_text(const GnsRepresentation& r) {
  const auto& p = *r.presentation;
  json meta = {{"degree", r.degree},
               {"gram_rank", r.gram_rank},
               {"window", r.window},
               {"generators", p.generators()},
               {"presentation_hash", presentation_hash(p)}};
  std::ostringstream out;
  out << meta.dump() << "\n";
  for (Gen g = 0; g < p.num_generators(); ++g) {
    const auto& m = r.matrices[g];
    out << "matrix " << p.name(g) << " " << m.rows() << " " << m.cols() << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << entry(m(i, j));
      out << "\n";
    }
  }
  out << "cyclic_vector " << r.cyclic_vector.size() << "\n";
  for (Eigen::Index i = 0; i < r.cyclic_vector.size(); ++i)
    out << (i ? " " : "") << entry(r.cyclic_vector(i));
  out << "\n";
  return out.str();
}

}  // namespace ores
