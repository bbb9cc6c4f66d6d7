#include "rca/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rca/affinity.hpp"
#include "rca/dunkl.hpp"
#include "rca/group_algebra.hpp"
#include "rca/kz.hpp"
#include "rca/morphisms.hpp"

namespace rca {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

struct InputError : std::runtime_error {
  InputError(const std::string& pointer, const std::string& what)
      : std::runtime_error("input error at " +
                           (pointer.empty() ? std::string("/") : pointer) +
                           ": " + what) {}
};

void require_keys(const json& obj, const std::string& ptr,
                  const std::vector<std::string>& required,
                  const std::vector<std::string>& optional) {
  if (!obj.is_object()) throw InputError(ptr, "expected an object");
  for (const auto& item : obj.items()) {
    const std::string& k = item.key();
    if (std::find(required.begin(), required.end(), k) == required.end() &&
        std::find(optional.begin(), optional.end(), k) == optional.end())
      throw InputError(ptr + "/" + k, "unknown key");
  }
  for (const auto& k : required)
    if (!obj.contains(k))
      throw InputError(ptr, "missing required key \"" + k + "\"");
}

long parse_bounded_int(const json& v, const std::string& ptr, long lo, long hi) {
  if (!v.is_number_integer())
    throw InputError(ptr, "expected an integer");
  long long n = v.get<long long>();
  if (n < lo || n > hi)
    throw InputError(ptr, "value out of range [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "]");
  return static_cast<long>(n);
}

Rational parse_rational(const json& v, const std::string& ptr) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  if (!v.is_string())
    throw InputError(ptr, "expected an integer or a rational string like \"3/4\"");
  const std::string s = v.get<std::string>();
  bool shape_ok = !s.empty();
  bool slash_seen = false;
  bool digit_seen = false, digit_after_slash = false;
  for (std::size_t i = 0; shape_ok && i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '-') {
      shape_ok = (i == 0);
    } else if (ch == '/') {
      shape_ok = !slash_seen && digit_seen;
      slash_seen = true;
    } else if (ch >= '0' && ch <= '9') {
      (slash_seen ? digit_after_slash : digit_seen) = true;
    } else {
      shape_ok = false;
    }
  }
  if (!shape_ok || !digit_seen || (slash_seen && !digit_after_slash))
    throw InputError(ptr, "malformed rational \"" + s + "\"");
  Rational q(s);
  if (q.get_den() == 0) throw InputError(ptr, "zero denominator in \"" + s + "\"");
  q.canonicalize();
  return q;
}

json rational_to_json(const Rational& q) {
  if (q.get_den() == 1) {
    if (q.get_num().fits_slong_p()) return json(q.get_num().get_si());
    return json(q.get_num().get_str());
  }
  return json(q.get_num().get_str() + "/" + q.get_den().get_str());
}

json cyc_to_json(const Cyclotomic& v) {
  if (v.is_rational()) return rational_to_json(v.rational_part());
  json coeffs = json::array();
  for (const auto& q : v.coeffs()) coeffs.push_back(rational_to_json(q));
  return json{{"conductor", v.conductor()}, {"coeffs", coeffs}};
}

// Matrix entries may be rationals or power-basis coefficient arrays in the
// declared conductor's root of unity.
Cyclotomic parse_entry(const json& v, const std::string& ptr, long conductor) {
  if (v.is_array()) {
    if (conductor <= 1)
      throw InputError(ptr, "coefficient arrays need a conductor above 1");
    if (v.empty() || static_cast<long>(v.size()) > euler_phi(conductor))
      throw InputError(ptr, "coefficient array length must be 1.." +
                                std::to_string(euler_phi(conductor)));
    std::vector<Rational> raw;
    for (std::size_t i = 0; i < v.size(); ++i)
      raw.push_back(parse_rational(v[i], ptr + "/" + std::to_string(i)));
    return Cyclotomic::from_power_coeffs(conductor, std::move(raw));
  }
  return Cyclotomic(parse_rational(v, ptr));
}

json entry_to_json(const Cyclotomic& v, long conductor) {
  if (v.is_rational()) return rational_to_json(v.rational_part());
  Cyclotomic promoted = v.promoted(conductor);
  json arr = json::array();
  for (const auto& q : promoted.coeffs()) arr.push_back(rational_to_json(q));
  return arr;
}

struct Options {
  long max_degree = 3;
  long order_cap = 10000;
  long seed = 12;
  bool strict = true;
  json canonical;  // echo of explicitly given keys only
};

Options parse_options(const json* maybe, const std::string& ptr,
                      const CliOptions& cli) {
  Options o;
  o.canonical = json::object();
  if (maybe) {
    require_keys(*maybe, ptr, {},
                 {"max_degree", "order_cap", "seed", "strict_equivariance"});
    if (maybe->contains("max_degree")) {
      o.max_degree = parse_bounded_int((*maybe)["max_degree"],
                                       ptr + "/max_degree", 0, 8);
      o.canonical["max_degree"] = o.max_degree;
    }
    if (maybe->contains("order_cap")) {
      o.order_cap = parse_bounded_int((*maybe)["order_cap"], ptr + "/order_cap",
                                      1, 10000000);
      o.canonical["order_cap"] = o.order_cap;
    }
    if (maybe->contains("seed")) {
      o.seed = parse_bounded_int((*maybe)["seed"], ptr + "/seed", 0,
                                 std::numeric_limits<long>::max());
      o.canonical["seed"] = o.seed;
    }
    if (maybe->contains("strict_equivariance")) {
      const json& s = (*maybe)["strict_equivariance"];
      if (!s.is_boolean())
        throw InputError(ptr + "/strict_equivariance", "expected a boolean");
      o.strict = s.get<bool>();
      o.canonical["strict_equivariance"] = o.strict;
    }
  }
  if (cli.max_degree) o.max_degree = *cli.max_degree;
  if (cli.order_cap) o.order_cap = *cli.order_cap;
  if (cli.seed) o.seed = *cli.seed;
  if (cli.strict) o.strict = *cli.strict;
  return o;
}

struct GroupSpec {
  FiniteMatrixGroup group;
  json canonical;
};

GroupSpec parse_group(const json& g, const std::string& ptr, long order_cap) {
  if (!g.is_object()) throw InputError(ptr, "expected an object");
  if (g.contains("family")) {
    require_keys(g, ptr, {"family", "param"}, {});
    if (!g["family"].is_string())
      throw InputError(ptr + "/family", "expected a string");
    std::string family = g["family"].get<std::string>();
    long param = parse_bounded_int(g["param"], ptr + "/param", 2, 30);
    long order = 0;
    if (family == "symmetric") {
      if (param > 8)
        throw InputError(ptr + "/param", "symmetric supports 2..8");
      order = 1;
      for (long i = 2; i <= param; ++i) order *= i;
    } else if (family == "cyclic") {
      order = param;
    } else if (family == "dihedral") {
      if (param < 3) throw InputError(ptr + "/param", "dihedral supports 3..30");
      order = 2 * param;
    } else {
      throw InputError(ptr + "/family",
                       "unknown family \"" + family +
                           "\"; expected symmetric, cyclic, or dihedral");
    }
    if (order > order_cap)
      throw cap_exceeded_error("group order " + std::to_string(order) +
                               " exceeds order cap " + std::to_string(order_cap));
    GroupSpec out{family == "symmetric"   ? builtin_symmetric(param)
                  : family == "cyclic"    ? builtin_cyclic(param)
                                          : builtin_dihedral(param),
                  json{{"family", family}, {"param", param}}};
    return out;
  }

  require_keys(g, ptr, {"dim", "conductor", "generators"}, {});
  long dim = parse_bounded_int(g["dim"], ptr + "/dim", 1, 8);
  long conductor = parse_bounded_int(g["conductor"], ptr + "/conductor", 1, 64);
  const json& gens = g["generators"];
  if (!gens.is_array())
    throw InputError(ptr + "/generators", "expected an array of matrices");
  std::vector<CycMatrix> matrices;
  json canon_gens = json::array();
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    std::string gptr = ptr + "/generators/" + std::to_string(gi);
    const json& rows = gens[gi];
    if (!rows.is_array() || static_cast<long>(rows.size()) != dim)
      throw InputError(gptr, "expected " + std::to_string(dim) + " rows");
    CycMatrix m(dim, dim);
    json canon_rows = json::array();
    for (long r = 0; r < dim; ++r) {
      std::string rptr = gptr + "/" + std::to_string(r);
      const json& row = rows[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<long>(row.size()) != dim)
        throw InputError(rptr, "row needs exactly " + std::to_string(dim) +
                                   " entries");
      json canon_row = json::array();
      for (long cidx = 0; cidx < dim; ++cidx) {
        Cyclotomic v = parse_entry(row[static_cast<std::size_t>(cidx)],
                                   rptr + "/" + std::to_string(cidx), conductor);
        m.at(r, cidx) = v;
        canon_row.push_back(entry_to_json(v, conductor));
      }
      canon_rows.push_back(std::move(canon_row));
    }
    matrices.push_back(std::move(m));
    canon_gens.push_back(std::move(canon_rows));
  }
  GroupSpec out{FiniteMatrixGroup::close(matrices, order_cap, dim),
                json{{"dim", dim},
                     {"conductor", conductor},
                     {"generators", std::move(canon_gens)}}};
  return out;
}

struct CSpec {
  ParamC c;
  json canonical;
};

CSpec parse_c(const json& v, const std::string& ptr, const ReflectionSet& rs,
              bool strict) {
  CSpec out;
  if (v.is_object()) {
    long nclasses = static_cast<long>(rs.classes.size());
    std::vector<Cyclotomic> per_class(static_cast<std::size_t>(nclasses));
    std::vector<bool> seen(static_cast<std::size_t>(nclasses), false);
    for (const auto& item : v.items()) {
      const std::string& key = item.key();
      long idx = -1;
      if (key.size() >= 2 && key[0] == 's') {
        char* end = nullptr;
        idx = std::strtol(key.c_str() + 1, &end, 10);
        if (end != key.c_str() + key.size()) idx = -1;
      }
      if (idx < 0 || idx >= nclasses)
        throw InputError(ptr + "/" + key,
                         "unknown class label; this group has " +
                             std::to_string(nclasses) + " reflection classes");
      per_class[static_cast<std::size_t>(idx)] =
          Cyclotomic(parse_rational(item.value(), ptr + "/" + key));
      seen[static_cast<std::size_t>(idx)] = true;
    }
    for (long i = 0; i < nclasses; ++i)
      if (!seen[static_cast<std::size_t>(i)])
        throw InputError(ptr, "missing class label s" + std::to_string(i));
    out.c = ParamC::by_class(rs, per_class);
    out.canonical = json::object();
    for (long i = 0; i < nclasses; ++i)
      out.canonical["s" + std::to_string(i)] =
          rational_to_json(per_class[static_cast<std::size_t>(i)].rational_part());
  } else if (v.is_array()) {
    if (v.size() != rs.data.size())
      throw InputError(ptr, "expected one value per reflection (" +
                                std::to_string(rs.data.size()) + "), got " +
                                std::to_string(v.size()));
    std::vector<Cyclotomic> vals;
    json canon = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rational q = parse_rational(v[i], ptr + "/" + std::to_string(i));
      vals.emplace_back(q);
      canon.push_back(rational_to_json(q));
    }
    out.c = ParamC::by_reflection(std::move(vals));
    out.canonical = std::move(canon);
  } else {
    Rational q = parse_rational(v, ptr);
    out.c = ParamC::constant(rs, Cyclotomic(q));
    out.canonical = rational_to_json(q);
  }
  if (strict && !out.c.is_equivariant(rs))
    throw InputError(ptr,
                     "parameter is not constant on conjugacy classes; pass "
                     "strict_equivariance = false to allow this");
  return out;
}

double rounded(double x) {
  if (std::abs(x) < 1e-9) return 0.0;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

json complex_list(const std::vector<std::complex<double>>& v) {
  json arr = json::array();
  for (const auto& z : v)
    arr.push_back(json::array({rounded(z.real()), rounded(z.imag())}));
  return arr;
}

json hits_to_json(const std::vector<long>& hits) {
  json arr = json::array();
  for (long h : hits) arr.push_back(h);
  return arr;
}

json affinity_verdict(const AffinityInput& input, bool with_spectrum) {
  AffinityReport rep = ab_decision(input);
  json v;
  v["affine"] = rep.affine;
  v["exact"] = rep.exactness_ok;
  v["conservative"] = rep.conservative_ok;
  v["a_hits"] = hits_to_json(rep.a_hits);
  v["b_hits"] = hits_to_json(rep.b_hits);
  if (with_spectrum) {
    auto wit = exactness_witness(input);
    if (wit) {
      v["witness"] = json{{"m", wit->m},
                          {"c_value", cyc_to_json(wit->c_value)},
                          {"weight", cyc_to_json(wit->weight)}};
    } else {
      v["witness"] = nullptr;
    }
    v["approx_spectrum"] = json{{"c_lambda", complex_list(rep.approx.c_lambda)},
                                {"d_lambda", complex_list(rep.approx.d_lambda)},
                                {"approximate", true}};
  }
  if (!rep.note.empty()) v["note"] = rep.note;
  return v;
}

json relation_to_json(const RelationReport& rep, bool informational_fields) {
  json v;
  v["ok"] = rep.ok;
  if (informational_fields) {
    v["informational_only"] = rep.informational_only;
    v["informational_holds"] = rep.informational_holds;
  }
  v["detail"] = rep.detail;
  return v;
}

struct ParsedJob {
  std::string command;
  json canonical;
  Options opts;
  std::optional<FiniteMatrixGroup> group;
  std::optional<ParamC> c;
  Cyclotomic omega;
  std::optional<LinearEquivariantMap> map;
  std::vector<ParamC> c_grid;
  std::vector<Cyclotomic> omega_grid;
};

ParsedJob parse_job(const json& root, const CliOptions& cli) {
  if (!root.is_object())
    throw InputError("", "top level must be an object");
  if (!root.contains("command") || !root["command"].is_string())
    throw InputError("/command", "missing or non-string command");
  ParsedJob job;
  job.command = root["command"].get<std::string>();

  const json* optsj = root.contains("options") ? &root["options"] : nullptr;
  job.opts = parse_options(optsj, "/options", cli);
  job.canonical = json{{"command", job.command}};

  auto finish = [&](std::initializer_list<std::pair<const char*, json>> fields) {
    for (const auto& f : fields) job.canonical[f.first] = f.second;
    if (optsj) job.canonical["options"] = job.opts.canonical;
  };

  if (job.command == "affinity-check" || job.command == "kz-flatness" ||
      job.command == "verify-algebra" || job.command == "pbw") {
    bool wants_omega = job.command == "affinity-check";
    std::vector<std::string> required = {"command", "group", "c"};
    if (wants_omega) required.push_back("omega");
    require_keys(root, "", required, {"options"});
    GroupSpec gs = parse_group(root["group"], "/group", job.opts.order_cap);
    ReflectionSet rs = reflection_set(gs.group);
    CSpec cs = parse_c(root["c"], "/c", rs, job.opts.strict);
    job.group = std::move(gs.group);
    job.c = std::move(cs.c);
    if (wants_omega) {
      job.omega = Cyclotomic(parse_rational(root["omega"], "/omega"));
      finish({{"group", gs.canonical},
              {"c", cs.canonical},
              {"omega", rational_to_json(job.omega.rational_part())}});
    } else {
      finish({{"group", gs.canonical}, {"c", cs.canonical}});
    }
    return job;
  }

  if (job.command == "pullback") {
    require_keys(root, "", {"command", "source", "target", "matrix", "c"},
                 {"options"});
    GroupSpec src = parse_group(root["source"], "/source", job.opts.order_cap);
    GroupSpec tgt = parse_group(root["target"], "/target", job.opts.order_cap);
    const json& rows = root["matrix"];
    long trows = tgt.group.dim(), tcols = src.group.dim();
    if (!rows.is_array() || static_cast<long>(rows.size()) != trows)
      throw InputError("/matrix", "expected " + std::to_string(trows) + " rows");
    CycMatrix m(trows, tcols);
    json canon_rows = json::array();
    for (long r = 0; r < trows; ++r) {
      const json& row = rows[static_cast<std::size_t>(r)];
      std::string rptr = "/matrix/" + std::to_string(r);
      if (!row.is_array() || static_cast<long>(row.size()) != tcols)
        throw InputError(rptr,
                         "row needs exactly " + std::to_string(tcols) + " entries");
      json canon_row = json::array();
      for (long cidx = 0; cidx < tcols; ++cidx) {
        Rational q = parse_rational(row[static_cast<std::size_t>(cidx)],
                                    rptr + "/" + std::to_string(cidx));
        m.at(r, cidx) = Cyclotomic(q);
        canon_row.push_back(rational_to_json(q));
      }
      canon_rows.push_back(std::move(canon_row));
    }
    LinearEquivariantMap phi(src.group, tgt.group, m);
    CSpec cs = parse_c(root["c"], "/c", phi.target_rs(), job.opts.strict);
    job.map = std::move(phi);
    job.c = std::move(cs.c);
    finish({{"source", src.canonical},
            {"target", tgt.canonical},
            {"matrix", std::move(canon_rows)},
            {"c", cs.canonical}});
    return job;
  }

  if (job.command == "sweep") {
    require_keys(root, "", {"command", "group", "c_grid", "omega_grid"},
                 {"options"});
    GroupSpec gs = parse_group(root["group"], "/group", job.opts.order_cap);
    ReflectionSet rs = reflection_set(gs.group);
    const json& cg = root["c_grid"];
    const json& og = root["omega_grid"];
    if (!cg.is_array()) throw InputError("/c_grid", "expected an array");
    if (!og.is_array()) throw InputError("/omega_grid", "expected an array");
    json canon_cg = json::array(), canon_og = json::array();
    for (std::size_t i = 0; i < cg.size(); ++i) {
      CSpec cs = parse_c(cg[i], "/c_grid/" + std::to_string(i), rs,
                         job.opts.strict);
      job.c_grid.push_back(std::move(cs.c));
      canon_cg.push_back(std::move(cs.canonical));
    }
    for (std::size_t i = 0; i < og.size(); ++i) {
      Rational q = parse_rational(og[i], "/omega_grid/" + std::to_string(i));
      job.omega_grid.emplace_back(q);
      canon_og.push_back(rational_to_json(q));
    }
    job.group = std::move(gs.group);
    finish({{"group", gs.canonical},
            {"c_grid", std::move(canon_cg)},
            {"omega_grid", std::move(canon_og)}});
    return job;
  }

  throw InputError("/command",
                   "unknown command \"" + job.command +
                       "\"; expected affinity-check, kz-flatness, "
                       "verify-algebra, pullback, pbw, or sweep");
}

json execute(const ParsedJob& job) {
  if (job.command == "affinity-check")
    return affinity_verdict(AffinityInput{*job.group, *job.c, job.omega}, true);

  if (job.command == "kz-flatness") {
    Arrangement ctx = make_arrangement(*job.group);
    FlatnessReport rep = is_flat(ctx, *job.c);
    json v;
    v["flat"] = rep.flat;
    if (rep.witness) {
      v["witness"] = json{{"element", rep.witness->element},
                          {"k", rep.witness->k},
                          {"l", rep.witness->l},
                          {"numerator", rep.witness->numerator.str()}};
    } else {
      v["witness"] = nullptr;
    }
    return v;
  }

  if (job.command == "verify-algebra") {
    Arrangement ctx = make_arrangement(*job.group);
    json v;
    v["commutativity"] = relation_to_json(
        verify_relations(ctx, *job.c, VerifyMode::commutativity), false);
    v["cross"] =
        relation_to_json(verify_relations(ctx, *job.c, VerifyMode::cross), true);
    v["euler"] = relation_to_json(
        verify_relations(ctx, *job.c, VerifyMode::euler), false);
    v["rho_c"] = cyc_to_json(rho_c(ctx.rs, *job.c));
    return v;
  }

  if (job.command == "pbw") {
    Arrangement ctx = make_arrangement(*job.group);
    PbwReport rep = pbw_independence(ctx, *job.c, job.opts.max_degree,
                                     static_cast<unsigned long>(job.opts.seed));
    json v;
    v["count"] = rep.count;
    v["rank"] = rep.rank;
    v["ok"] = rep.ok;
    v["max_degree"] = job.opts.max_degree;
    v["seed"] = job.opts.seed;
    return v;
  }

  if (job.command == "pullback") {
    const LinearEquivariantMap& phi = *job.map;
    MelysReport mr = is_melys(phi, *job.c);
    json v;
    v["melys"] = mr.melys;
    v["failing_reflections"] = hits_to_json(mr.failing_reflections);
    if (mr.melys) {
      ParamC pulled = pullback_c(phi, *job.c);
      json vals = json::array();
      for (long i = 0; i < pulled.size(); ++i)
        vals.push_back(cyc_to_json(pulled.value(i)));
      v["pulled_c"] = std::move(vals);
      v["form_ok"] = pullbackform_check(phi, *job.c).ok;
    } else {
      v["pulled_c"] = nullptr;
      v["form_ok"] = nullptr;
    }
    return v;
  }

  // sweep
  auto surface = criterion_surface(*job.group, job.c_grid, job.omega_grid);
  json points = json::array();
  for (const auto& pt : surface) {
    json p;
    p["c_index"] = pt.c_index;
    p["omega_index"] = pt.omega_index;
    p["affine"] = pt.report.affine;
    p["exact"] = pt.report.exactness_ok;
    p["conservative"] = pt.report.conservative_ok;
    p["a_hits"] = hits_to_json(pt.report.a_hits);
    p["b_hits"] = hits_to_json(pt.report.b_hits);
    if (!pt.report.note.empty()) p["note"] = pt.report.note;
    points.push_back(std::move(p));
  }
  return json{{"points", std::move(points)}};
}

}  // namespace

RunResult run_job_text(const std::string& input_text, const CliOptions& opts) {
  json root;
  try {
    root = json::parse(input_text);
  } catch (const json::parse_error& e) {
    return {std::string("input error: ") + e.what() + "\n", 2};
  }
  try {
    auto t0 = std::chrono::steady_clock::now();
    ParsedJob job = parse_job(root, opts);
    json verdict = execute(job);
    long ms = 0;
    if (opts.timing) {
      auto t1 = std::chrono::steady_clock::now();
      ms = static_cast<long>(
          std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    }
    json report{{"command", job.command},
                {"verdict", std::move(verdict)},
                {"timing_ms", ms},
                {"version", kVersion}};
    return {report.dump(2) + "\n", 0};
  } catch (const cap_exceeded_error& e) {
    return {std::string("resource cap exceeded: ") + e.what() + "\n", 3};
  } catch (const InputError& e) {
    return {std::string(e.what()) + "\n", 2};
  } catch (const std::exception& e) {
    return {std::string("input error: ") + e.what() + "\n", 2};
  }
}

std::string canonical_job_text(const std::string& input_text) {
  try {
    json root = json::parse(input_text);
    ParsedJob job = parse_job(root, CliOptions{});
    return job.canonical.dump(2) + "\n";
  } catch (const std::exception& e) {
    throw std::invalid_argument(e.what());
  }
}

}  // namespace rca
