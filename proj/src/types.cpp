#include "dagsp/types.hpp"

#include <ostream>

namespace dagsp {

std::string dist_to_string(ExtDist d) {
  return d.is_infinite() ? "inf" : std::to_string(d.value());
}

DistMatrix DistMatrix::with_zero_diagonal(Vertex n) {
  DistMatrix m(n);
  for (Vertex v = 0; v < n; ++v) m(v, v) = ExtDist::zero();
  return m;
}

DistMatrix DistMatrix::transposed() const {
  DistMatrix t(n_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = 0; v < n_; ++v) t(v, u) = (*this)(u, v);
  return t;
}

void write_dist_csv(std::ostream& out, const DistMatrix& m) {
  out << "src,dst,dist\n";
  for (Vertex u = 0; u < m.size(); ++u)
    for (Vertex v = 0; v < m.size(); ++v)
      out << u << ',' << v << ',' << dist_to_string(m(u, v)) << '\n';
}

}  // namespace dagsp
