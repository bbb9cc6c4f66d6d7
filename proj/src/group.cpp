#include "rca/group.hpp"

#include <algorithm>
#include <numeric>

namespace rca {

namespace {

long lcm_long(long a, long b) { return std::lcm(a, b); }

// How many hash buckets to use for an expected element count.
constexpr std::size_t kBucketCount = 1 << 12;

std::size_t bucket_of(const CycMatrix& m) { return m.hash() % kBucketCount; }

}  // namespace

long FiniteMatrixGroup::index_of(const CycMatrix& m) const {
  const auto& bucket = hash_buckets_[bucket_of(m)];
  for (long idx : bucket)
    if (elements_[idx].matrix == m) return idx;
  return -1;
}

long FiniteMatrixGroup::product(long i, long j) const {
  if (!mult_table_.empty()) return mult_table_[i * order() + j];
  long idx = index_of(elements_[i].matrix * elements_[j].matrix);
  if (idx < 0) throw std::logic_error("group is not closed under multiplication");
  return idx;
}

long FiniteMatrixGroup::conjugate(long g, long h) const {
  return product(product(g, h), inverse(g));
}

FiniteMatrixGroup FiniteMatrixGroup::close(const std::vector<CycMatrix>& generators,
                                           long order_cap, long dim_hint) {
  long n = dim_hint;
  long conductor = 1;
  for (const auto& g : generators) {
    if (g.rows() != g.cols()) throw std::invalid_argument("generator is not square");
    if (n < 0) n = g.rows();
    if (g.rows() != n) throw std::invalid_argument("generators have mixed dimensions");
    conductor = lcm_long(conductor, g.common_conductor());
  }
  if (n < 0)
    throw std::invalid_argument("trivial group needs an explicit dimension");

  // Everything lives at one conductor so matrix hashes are comparable.
  std::vector<CycMatrix> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) {
    CycMatrix p = g.promoted(conductor);
    if (p.det().is_zero()) throw std::invalid_argument("generator is not invertible");
    gens.push_back(std::move(p));
  }

  FiniteMatrixGroup w;
  w.dim_ = n;
  w.conductor_ = conductor;
  w.hash_buckets_.assign(kBucketCount, {});

  auto push = [&](CycMatrix m) {
    long idx = static_cast<long>(w.elements_.size());
    w.hash_buckets_[bucket_of(m)].push_back(idx);
    w.elements_.push_back(GroupElement{std::move(m)});
  };

  push(CycMatrix::identity(n).promoted(conductor));
  for (std::size_t head = 0; head < w.elements_.size(); ++head) {
    for (const auto& g : gens) {
      CycMatrix p = w.elements_[head].matrix * g;
      if (w.index_of(p) >= 0) continue;
      if (static_cast<long>(w.elements_.size()) >= order_cap)
        throw cap_exceeded_error("group order exceeds cap " + std::to_string(order_cap));
      push(std::move(p));
    }
  }

  w.build_tables();
  return w;
}

void FiniteMatrixGroup::build_tables() {
  long n = order();

  if (n <= 2048) {
    mult_table_.resize(static_cast<std::size_t>(n) * n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        long idx = index_of(elements_[i].matrix * elements_[j].matrix);
        if (idx < 0) throw std::logic_error("closure produced an open multiplication");
        mult_table_[i * n + j] = idx;
      }
  }

  inverses_.assign(n, -1);
  for (long i = 0; i < n; ++i) {
    if (inverses_[i] >= 0) continue;
    for (long j = 0; j < n; ++j)
      if (product(i, j) == 0) {
        inverses_[i] = j;
        inverses_[j] = i;
        break;
      }
    if (inverses_[i] < 0) throw std::logic_error("element without inverse");
  }

  class_of_.assign(n, -1);
  for (long i = 0; i < n; ++i) {
    if (class_of_[i] >= 0) continue;
    long cls = static_cast<long>(classes_.size());
    std::vector<long> members;
    for (long g = 0; g < n; ++g) {
      long c = conjugate(g, i);
      if (class_of_[c] < 0) {
        class_of_[c] = cls;
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    classes_.push_back(std::move(members));
  }
}

FiniteMatrixGroup builtin_symmetric(long n) {
  if (n < 1) throw std::invalid_argument("symmetric group needs n >= 1");
  std::vector<CycMatrix> gens;
  for (long k = 0; k + 1 < n; ++k) {
    CycMatrix m = CycMatrix::identity(n);
    m.at(k, k) = Cyclotomic();
    m.at(k + 1, k + 1) = Cyclotomic();
    m.at(k, k + 1) = cyc(1);
    m.at(k + 1, k) = cyc(1);
    gens.push_back(std::move(m));
  }
  return FiniteMatrixGroup::close(gens, 2 * 3628800, n);
}

FiniteMatrixGroup builtin_cyclic(long m) {
  if (m < 1) throw std::invalid_argument("cyclic group needs m >= 1");
  CycMatrix g(1, 1);
  g.at(0, 0) = Cyclotomic::root_of_unity(1, m);
  return FiniteMatrixGroup::close({g}, m + 1, 1);
}

FiniteMatrixGroup builtin_dihedral(long m) {
  if (m < 1) throw std::invalid_argument("dihedral group needs m >= 1");
  CycMatrix r(2, 2), s(2, 2);
  r.at(0, 0) = Cyclotomic::root_of_unity(1, m);
  r.at(1, 1) = Cyclotomic::root_of_unity(-1, m);
  s.at(0, 1) = cyc(1);
  s.at(1, 0) = cyc(1);
  return FiniteMatrixGroup::close({r, s}, 2 * m + 1, 2);
}

FiniteMatrixGroup block_product(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b) {
  long n = a.dim() + b.dim();
  std::vector<CycMatrix> gens;
  auto embed = [&](const CycMatrix& m, long offset) {
    CycMatrix e = CycMatrix::identity(n);
    for (long i = 0; i < m.rows(); ++i) {
      if (i + offset < n) e.at(i + offset, i + offset) = Cyclotomic();
      for (long j = 0; j < m.cols(); ++j) e.at(i + offset, j + offset) = m.at(i, j);
    }
    gens.push_back(std::move(e));
  };
  // Every element (not just generators) keeps the closure caps untangled.
  for (long i = 1; i < a.order(); ++i) embed(a.element(i).matrix, 0);
  for (long i = 1; i < b.order(); ++i) embed(b.element(i).matrix, a.dim());
  return FiniteMatrixGroup::close(gens, a.order() * b.order() + 1, n);
}

std::vector<ReflectionDatum> reflections(const FiniteMatrixGroup& w) {
  std::vector<ReflectionDatum> out;
  long n = w.dim();
  for (long idx = 1; idx < w.order(); ++idx) {
    const CycMatrix& s = w.element(idx).matrix;
    CycMatrix moved = s - CycMatrix::identity(n);
    if (moved.rank() != 1) continue;

    // moved = coroot_direction * root_covector, so any nonzero row of `moved`
    // cuts out the fixed hyperplane and any nonzero column spans the moving
    // line.
    CycVector root(n), coroot_dir(n);
    long row = -1, col = -1;
    for (long i = 0; i < n && row < 0; ++i)
      for (long j = 0; j < n; ++j)
        if (!moved.at(i, j).is_zero()) {
          row = i;
          break;
        }
    for (long j = 0; j < n && col < 0; ++j)
      for (long i = 0; i < n; ++i)
        if (!moved.at(i, j).is_zero()) {
          col = j;
          break;
        }
    for (long j = 0; j < n; ++j) root[j] = moved.at(row, j);
    for (long i = 0; i < n; ++i) coroot_dir[i] = moved.at(i, col);

    // Normalize the root's first nonzero coordinate to 1.
    Cyclotomic lead;
    for (long j = 0; j < n; ++j)
      if (!root[j].is_zero()) {
        lead = root[j];
        break;
      }
    Cyclotomic lead_inv = lead.inverse();
    for (auto& v : root) v = v * lead_inv;

    // Scale the coroot so root(coroot) = 2.
    Cyclotomic pairing;
    for (long i = 0; i < n; ++i) pairing = pairing + root[i] * coroot_dir[i];
    if (pairing.is_zero())
      throw std::logic_error("unipotent rank-one element in a finite group");
    Cyclotomic scale = cyc(2) * pairing.inverse();
    CycVector coroot(n);
    for (long i = 0; i < n; ++i) coroot[i] = coroot_dir[i] * scale;

    // Dual eigenvalue: root composed with s^-1 is lambda * root.
    const CycMatrix& sinv = w.element(w.inverse(idx)).matrix;
    long lead_j = -1;
    for (long j = 0; j < n; ++j)
      if (!root[j].is_zero()) {
        lead_j = j;
        break;
      }
    Cyclotomic mapped;
    for (long i = 0; i < n; ++i) mapped = mapped + root[i] * sinv.at(i, lead_j);
    Cyclotomic lambda = mapped * root[lead_j].inverse();

    out.push_back(ReflectionDatum{idx, std::move(root), std::move(coroot),
                                  std::move(lambda), -1});
  }
  return out;
}

ReflectionSet reflection_set(const FiniteMatrixGroup& w) {
  ReflectionSet rs;
  rs.data = reflections(w);

  for (auto& r : rs.data) {
    long found = -1;
    for (std::size_t h = 0; h < rs.hyperplanes.size(); ++h)
      if (rs.hyperplanes[h] == r.root) {
        found = static_cast<long>(h);
        break;
      }
    if (found < 0) {
      found = static_cast<long>(rs.hyperplanes.size());
      rs.hyperplanes.push_back(r.root);
    }
    r.hyperplane = found;
  }

  // Conjugacy classes restricted to reflections, ordered by first member.
  std::vector<long> class_seen;
  for (std::size_t i = 0; i < rs.data.size(); ++i) {
    long cls = w.class_of(rs.data[i].element);
    auto it = std::find(class_seen.begin(), class_seen.end(), cls);
    if (it == class_seen.end()) {
      class_seen.push_back(cls);
      rs.classes.push_back({static_cast<long>(i)});
    } else {
      rs.classes[it - class_seen.begin()].push_back(static_cast<long>(i));
    }
  }
  return rs;
}

std::vector<ProjectiveFixedLocus> projective_reflections(const FiniteMatrixGroup& w) {
  std::vector<ProjectiveFixedLocus> out;
  for (const auto& r : reflections(w)) {
    CycVector point = r.coroot;
    Cyclotomic lead;
    for (const auto& v : point)
      if (!v.is_zero()) {
        lead = v;
        break;
      }
    Cyclotomic lead_inv = lead.inverse();
    for (auto& v : point) v = v * lead_inv;
    out.push_back(ProjectiveFixedLocus{r.element, r.root, w.dim() >= 2,
                                       std::move(point), w.dim() == 2});
  }
  return out;
}

ParamC ParamC::constant(const ReflectionSet& rs, const Cyclotomic& v) {
  ParamC c;
  c.values_.assign(rs.data.size(), v);
  return c;
}

ParamC ParamC::by_class(const ReflectionSet& rs, const std::vector<Cyclotomic>& per_class) {
  if (per_class.size() != rs.classes.size())
    throw std::invalid_argument("expected one value per reflection class");
  ParamC c;
  c.values_.assign(rs.data.size(), Cyclotomic());
  for (std::size_t k = 0; k < rs.classes.size(); ++k)
    for (long i : rs.classes[k]) c.values_[i] = per_class[k];
  return c;
}

ParamC ParamC::by_reflection(std::vector<Cyclotomic> values) {
  ParamC c;
  c.values_ = std::move(values);
  return c;
}

bool ParamC::is_equivariant(const ReflectionSet& rs) const {
  if (values_.size() != rs.data.size()) return false;
  for (const auto& cls : rs.classes)
    for (long i : cls)
      if (!(values_[i] == values_[cls[0]])) return false;
  return true;
}

}  // namespace rca
