#include "rca/morphisms.hpp"

#include <sstream>
#include <stdexcept>

namespace rca {

namespace {

// alpha composed with phi, as a covector on the source.
CycVector pulled_covector(const CycVector& alpha, const CycMatrix& phi) {
  CycVector out(phi.cols());
  for (long j = 0; j < phi.cols(); ++j) {
    Cyclotomic v;
    for (long i = 0; i < phi.rows(); ++i) v = v + alpha[i] * phi.at(i, j);
    out[j] = v;
  }
  return out;
}

// Scale so the first nonzero coordinate is 1; zero vectors pass through.
CycVector normalized(CycVector v) {
  for (const auto& x : v) {
    if (!x.is_zero()) {
      Cyclotomic inv = x.inverse();
      for (auto& y : v) y = y * inv;
      break;
    }
  }
  return v;
}

bool fixes_kernel_pointwise(const CycMatrix& element, const CycVector& covector) {
  long m = element.cols();
  CycMatrix row(1, m);
  for (long j = 0; j < m; ++j) row.at(0, j) = covector[j];
  for (const auto& v : row.kernel()) {
    CycVector moved = element.apply(v);
    for (long j = 0; j < m; ++j) {
      if (!(moved[j] == v[j])) return false;
    }
  }
  return true;
}

}  // namespace

LinearEquivariantMap::LinearEquivariantMap(FiniteMatrixGroup source,
                                           FiniteMatrixGroup target,
                                           CycMatrix matrix)
    : source_(std::move(source)),
      target_(std::move(target)),
      matrix_(std::move(matrix)) {
  if (source_.order() != target_.order())
    throw std::invalid_argument(
        "source and target groups cannot be identified: different orders");
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
    throw std::invalid_argument("map shape does not fit the two spaces");
  for (long g = 0; g < source_.order(); ++g) {
    if (!(matrix_ * source_.element(g).matrix ==
          target_.element(g).matrix * matrix_))
      throw std::invalid_argument("map is not equivariant at element " +
                                  std::to_string(g));
  }
  if (matrix_.rank() != target_.dim())
    throw std::invalid_argument("map is not surjective");
  source_rs_ = reflection_set(source_);
  target_rs_ = reflection_set(target_);
}

MelysReport is_melys(const LinearEquivariantMap& phi, const ParamC& c) {
  if (c.size() != static_cast<long>(phi.target_rs().data.size()))
    throw std::invalid_argument("parameter count does not match reflections");
  MelysReport report;
  for (std::size_t s = 0; s < phi.target_rs().data.size(); ++s) {
    const auto& r = phi.target_rs().data[s];
    if (c.value(static_cast<long>(s)).is_zero()) continue;
    CycVector pulled = pulled_covector(r.root, phi.matrix());
    const CycMatrix& w = phi.source().element(r.element).matrix;
    if (!fixes_kernel_pointwise(w, pulled)) {
      report.melys = false;
      report.failing_reflections.push_back(static_cast<long>(s));
    }
  }
  return report;
}

ParamC pullback_c(const LinearEquivariantMap& phi, const ParamC& c) {
  if (!is_melys(phi, c).melys)
    throw std::invalid_argument("pullback requires a melys map");
  const auto& src = phi.source_rs();
  std::vector<Cyclotomic> values(src.data.size());
  for (std::size_t t = 0; t < phi.target_rs().data.size(); ++t) {
    const auto& r = phi.target_rs().data[t];
    const Cyclotomic& v = c.value(static_cast<long>(t));
    if (v.is_zero()) continue;
    CycVector pulled = normalized(pulled_covector(r.root, phi.matrix()));
    bool placed = false;
    for (std::size_t s = 0; s < src.data.size(); ++s) {
      if (src.data[s].element != r.element) continue;
      if (src.hyperplanes[src.data[s].hyperplane] == pulled) {
        values[s] = values[s] + v;
        placed = true;
        break;
      }
    }
    if (!placed)
      throw std::logic_error(
          "no source reflection receives a pulled parameter");
  }
  return ParamC::by_reflection(std::move(values));
}

PullbackFormReport pullbackform_check(const LinearEquivariantMap& phi,
                                      const ParamC& c) {
  PullbackFormReport report;
  ParamC pulled = pullback_c(phi, c);
  const auto& src = phi.source_rs();
  // Per source reflection: total pulled coupling from the target must equal
  // the coupling of the pulled parameter.  With matching eigenvalues the
  // factors 2/(1 - lambda) cancel; a mismatch pins an eigenvalue drift.
  for (std::size_t s = 0; s < src.data.size(); ++s) {
    const auto& rs = src.data[s];
    Cyclotomic target_side;
    for (std::size_t t = 0; t < phi.target_rs().data.size(); ++t) {
      const auto& rt = phi.target_rs().data[t];
      if (rt.element != rs.element || c.value(static_cast<long>(t)).is_zero())
        continue;
      CycVector pulled_root = normalized(pulled_covector(rt.root, phi.matrix()));
      if (!(src.hyperplanes[rs.hyperplane] == pulled_root)) continue;
      if (!(rt.eigenvalue == rs.eigenvalue)) {
        report.lambda_preserved = false;
        report.detail = "eigenvalue drift at target reflection " +
                        std::to_string(t);
      }
      target_side = target_side + cyc(2) * c.value(static_cast<long>(t)) *
                                      (cyc(1) - rt.eigenvalue).inverse();
    }
    Cyclotomic source_side = cyc(2) * pulled.value(static_cast<long>(s)) *
                             (cyc(1) - rs.eigenvalue).inverse();
    if (!(target_side == source_side)) {
      report.ok = false;
      if (report.detail.empty()) {
        std::ostringstream os;
        os << "coupling mismatch at source reflection " << s;
        report.detail = os.str();
      }
    }
  }
  report.ok = report.ok && report.lambda_preserved;
  return report;
}

Cyclotomic projective_twist(const Cyclotomic& chi) { return chi; }

}  // namespace rca
