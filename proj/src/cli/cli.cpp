#include "cli/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/matrix_io.hpp"
#include "psdapprox/bipartite.hpp"
#include "psdapprox/error.hpp"
#include "psdapprox/horn.hpp"
#include "psdapprox/psd.hpp"
#include "psdapprox/random.hpp"
#include "psdapprox/tensor.hpp"

namespace psdapprox::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string in;
  std::string in2;
  std::vector<std::size_t> dims;
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
  std::string format = "json";
  bool symmetrize = false;
  std::string subsystem = "second";
  std::string alpha;
  std::string beta;
  std::string gamma;
  int n = 0;
  int r = 0;
  std::string kind = "hermitian";
};

struct Report {
  json body;
  int exit_code = kSuccess;
};

// ---- argument helpers -------------------------------------------------------

std::vector<double> parse_list(const std::string& text, const char* name) {
  if (text.empty()) throw InputError(std::string("--") + name + " is required");
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (item.empty() || used != item.size() || !std::isfinite(x)) {
      throw InputError(std::string("--") + name + ": cannot parse \"" + item + "\" as a number");
    }
    values.push_back(x);
  }
  if (values.empty()) throw InputError(std::string("--") + name + " is empty");
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

HermitianMatrix to_hermitian(const MatrixC& m, const Options& o) {
  return HermitianMatrix(m, o.tol,
                         o.symmetrize ? HermitianPolicy::symmetrize : HermitianPolicy::reject);
}

BipartiteDims resolve_dims(const Options& o, const MatrixFile& file) {
  if (!o.dims.empty()) {
    if (o.dims.size() != 2) throw InputError("--dims takes exactly two integers");
    return BipartiteDims{o.dims[0], o.dims[1]};
  }
  if (file.dims) return *file.dims;
  throw InputError("bipartite dimensions are required: pass --dims M N or add \"dims\" to the file");
}

Subsystem resolve_subsystem(const Options& o) {
  if (o.subsystem == "first") return Subsystem::first;
  if (o.subsystem == "second") return Subsystem::second;
  throw InputError("--subsystem must be 'first' or 'second'");
}

std::vector<HermitianMatrix> read_family(const std::string& path, const Options& o) {
  std::vector<HermitianMatrix> family;
  for (const auto& f : read_matrix_list(path)) family.push_back(to_hermitian(f.matrix, o));
  return family;
}

// ---- report helpers ---------------------------------------------------------

json signature_json(const Signature& s) {
  return {{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

const char* kind_name(InequalityKind k) {
  switch (k) {
    case InequalityKind::trace: return "trace";
    case InequalityKind::upper: return "upper";
    case InequalityKind::complementary: return "complementary";
    case InequalityKind::weyl: return "weyl";
    case InequalityKind::practical: return "practical";
  }
  return "unknown";
}

json inequality_json(const InequalityReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"kind", kind_name(v.kind)},
                          {"r", v.r},
                          {"I", v.triple.i},
                          {"J", v.triple.j},
                          {"K", v.triple.k},
                          {"lhs", v.lhs},
                          {"rhs", v.rhs},
                          {"slack", v.slack}});
  }
  return {{"checked", report.checked},
          {"violation_count", report.violations.size()},
          {"violations", std::move(violations)},
          {"trace_residual", report.trace_residual}};
}

SpectrumTriple triple_from(const Options& o) {
  return SpectrumTriple(parse_list(o.alpha, "alpha"), parse_list(o.beta, "beta"),
                        parse_list(o.gamma, "gamma"));
}

// ---- subcommands ------------------------------------------------------------

Report cmd_split(const Options& o) {
  const PosNegParts parts = split_pos_neg(to_hermitian(read_matrix_file(o.in).matrix, o), o.tol);
  return {{{"a_plus", matrix_to_json(parts.plus.matrix())},
           {"a_minus", matrix_to_json(parts.minus.matrix())},
           {"signature", signature_json(parts.signature)}}};
}

Report cmd_nearest_psd(const Options& o) {
  const NearestPsd r = nearest_psd(to_hermitian(read_matrix_file(o.in).matrix, o), o.tol);
  return {{{"approximant", matrix_to_json(r.approximant.matrix())}, {"distance", r.distance}}};
}

Report cmd_is_psd(const Options& o) {
  const PsdCheck c = is_psd(to_hermitian(read_matrix_file(o.in).matrix, o), o.tol);
  return {{{"is_psd", c.is_psd}, {"min_eigenvalue", c.min_eigenvalue}},
          c.is_psd ? kSuccess : kViolation};
}

Report cmd_tensor_split(const Options& o) {
  const PosNegParts parts = tensor_split(to_hermitian(read_matrix_file(o.in).matrix, o),
                                         to_hermitian(read_matrix_file(o.in2).matrix, o), o.tol);
  return {{{"plus", matrix_to_json(parts.plus.matrix())},
           {"minus", matrix_to_json(parts.minus.matrix())},
           {"signature", signature_json(parts.signature)}}};
}

Report cmd_tensor_nearest(const Options& o) {
  const NearestPsd r = nearest_psd_tensor(to_hermitian(read_matrix_file(o.in).matrix, o),
                                          to_hermitian(read_matrix_file(o.in2).matrix, o), o.tol);
  return {{{"approximant", matrix_to_json(r.approximant.matrix())}, {"distance", r.distance}}};
}

Report cmd_schmidt(const Options& o) {
  const MatrixFile file = read_matrix_file(o.in);
  const BipartiteDims dims = resolve_dims(o, file);
  const SchmidtDecomposition d = operator_schmidt(to_hermitian(file.matrix, o), dims, o.tol);
  json terms = json::array();
  for (const auto& t : d.terms) {
    terms.push_back({{"weight", t.weight},
                     {"b", matrix_to_json(t.b.matrix())},
                     {"c", matrix_to_json(t.c.matrix())}});
  }
  return {{{"dims", {dims.dim_a, dims.dim_b}},
           {"terms", std::move(terms)},
           {"dropped", d.dropped},
           {"reconstruction_error", frobenius_norm(d.reconstruct() - file.matrix)}}};
}

Report cmd_ppt(const Options& o) {
  const MatrixFile file = read_matrix_file(o.in);
  const BipartiteDims dims = resolve_dims(o, file);
  const DensityMatrix rho = make_density(file.matrix, dims, o.tol, false,
                                         o.symmetrize ? HermitianPolicy::symmetrize
                                                      : HermitianPolicy::reject);
  const PptResult r = ppt_check(rho, o.tol, resolve_subsystem(o));
  return {{{"is_ppt", r.is_ppt}, {"min_eigenvalue", r.min_eigenvalue}, {"subsystem", o.subsystem}},
          r.is_ppt ? kSuccess : kViolation};
}

Report cmd_partial_transpose(const Options& o) {
  const MatrixFile file = read_matrix_file(o.in);
  const BipartiteDims dims = resolve_dims(o, file);
  return {matrix_to_json(partial_transpose(file.matrix, dims, resolve_subsystem(o)), dims)};
}

Report cmd_commute_approx(const Options& o) {
  const auto a = read_family(o.in, o);
  const auto b = read_family(o.in2, o);
  const CommutingFamilyApprox r = commuting_family_approx(a, b, o.tol, o.seed);
  const bool additive = r.additivity_gap <= o.tol * tolerance_scale(r.approximant.matrix());
  return {{{"approximant", matrix_to_json(r.approximant.matrix())},
           {"distance", r.distance},
           {"exact_distance", r.exact_distance},
           {"additivity_gap", r.additivity_gap},
           {"additive", additive}},
          additive ? kSuccess : kViolation};
}

Report cmd_bound_report(const Options& o) {
  const MatrixFile file = read_matrix_file(o.in);
  const BipartiteDims dims = resolve_dims(o, file);
  const SchmidtDecomposition d = operator_schmidt(to_hermitian(file.matrix, o), dims, o.tol);
  const BoundReport r = tensor_sum_bound_report(d, o.tol);
  return {{{"lhs", r.lhs},
           {"rhs", r.rhs},
           {"satisfied", r.satisfied},
           {"hypothesis_held", r.hypothesis_held},
           {"terms", d.terms.size()}},
          r.satisfied ? kSuccess : kViolation};
}

Report cmd_weyl(const Options& o) {
  const InequalityReport r = weyl_check(triple_from(o), o.tol);
  return {inequality_json(r), r.ok() ? kSuccess : kViolation};
}

Report cmd_horn(const Options& o) {
  const InequalityReport r = horn_check(triple_from(o), o.tol);
  return {inequality_json(r), r.ok() ? kSuccess : kViolation};
}

Report cmd_horn_sets(const Options& o) {
  const HornTripleSet& s = horn_sets(o.n, o.r);
  json triples = json::array();
  for (const auto& t : s.triples) triples.push_back({t.i, t.j, t.k});
  return {{{"n", s.n}, {"r", s.r}, {"count", s.triples.size()}, {"triples", std::move(triples)}}};
}

Report cmd_practical_bounds(const Options& o) {
  const auto alpha = parse_list(o.alpha, "alpha");
  const auto beta = parse_list(o.beta, "beta");
  json intervals = json::array();
  for (const auto& iv : practical_bounds(alpha, beta)) intervals.push_back({iv.lo, iv.hi});
  Report report{{{"intervals", std::move(intervals)}}};
  if (!o.gamma.empty()) {
    const InequalityReport r =
        practical_bounds_check(SpectrumTriple(alpha, beta, parse_list(o.gamma, "gamma")), o.tol);
    report.body["check"] = inequality_json(r);
    if (!r.ok()) report.exit_code = kViolation;
  }
  return report;
}

Report cmd_oracle_sum(const Options& o) {
  const auto alpha = parse_list(o.alpha, "alpha");
  const auto beta = parse_list(o.beta, "beta");
  const SpectrumTriple t = sum_spectrum_oracle(alpha, beta, o.seed, o.tol);
  return {{{"alpha", t.alpha()}, {"beta", t.beta()}, {"gamma", t.gamma()}, {"seed", o.seed}}};
}

Report cmd_simdiag(const Options& o) {
  const auto family = read_family(o.in, o);
  const SimultaneousDiagonalization sd = simultaneous_diag(family, o.tol, o.seed);
  return {{{"q", matrix_to_json(sd.q)}, {"diagonals", sd.diagonals}}};
}

Report cmd_generate(const Options& o) {
  if (o.n <= 0) throw InputError("--n must be a positive integer");
  const auto n = static_cast<std::size_t>(o.n);
  Rng rng(o.seed);
  std::optional<BipartiteDims> dims;
  if (!o.dims.empty()) {
    if (o.dims.size() != 2 || o.dims[0] * o.dims[1] != n) {
      throw InputError("--dims must be two integers whose product is --n");
    }
    dims = BipartiteDims{o.dims[0], o.dims[1]};
  }
  if (o.kind == "hermitian") return {matrix_to_json(random_hermitian(n, rng).matrix(), dims)};
  if (o.kind == "psd") return {matrix_to_json(random_psd(n, rng).matrix(), dims)};
  if (o.kind == "density") return {matrix_to_json(random_density(n, rng).matrix(), dims)};
  if (o.kind == "unitary") return {matrix_to_json(random_unitary(n, rng), dims)};
  throw InputError("--kind must be one of hermitian, psd, density, unitary");
}

// ---- output -----------------------------------------------------------------

bool is_matrix_doc(const json& j) {
  return j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("data");
}

std::string format_number(double x) {
  std::ostringstream s;
  s << std::setprecision(10) << x;
  return s.str();
}

std::string format_complex(double re, double im) {
  std::ostringstream s;
  s << std::setprecision(6) << re;
  if (im != 0.0) s << (im < 0 ? " - " : " + ") << std::setprecision(6) << std::abs(im) << "i";
  return s.str();
}

void render_pretty(const json& j, std::ostream& out, int indent);

void render_matrix(const json& m, std::ostream& out, int indent) {
  const auto rows = m.at("rows").get<std::size_t>();
  const auto cols = m.at("cols").get<std::size_t>();
  const json& data = m.at("data");
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (const auto& e : data) {
    cells.push_back(format_complex(e[0].get<double>(), e[1].get<double>()));
    width = std::max(width, cells.back().size());
  }
  for (std::size_t i = 0; i < rows; ++i) {
    out << std::string(static_cast<std::size_t>(indent), ' ') << "[";
    for (std::size_t c = 0; c < cols; ++c) {
      out << (c ? "  " : " ") << std::setw(static_cast<int>(width)) << cells[i * cols + c];
    }
    out << " ]\n";
  }
}

void render_scalar(const json& v, std::ostream& out) {
  if (v.is_number_float()) {
    out << format_number(v.get<double>());
  } else if (v.is_string()) {
    out << v.get<std::string>();
  } else {
    out << v.dump();
  }
}

bool is_flat_array(const json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) {
           return e.is_primitive() || (e.is_array() && std::all_of(e.begin(), e.end(), [](const json& x) {
                                         return x.is_primitive() || x.is_array();
                                       }));
         });
}

void render_flat(const json& v, std::ostream& out) {
  if (!v.is_array()) {
    render_scalar(v, out);
    return;
  }
  out << "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out << ", ";
    render_flat(v[k], out);
  }
  out << "]";
}

void render_pretty(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_matrix_doc(j)) {
    if (j.contains("dims")) out << pad << "dims: " << j.at("dims").dump() << "\n";
    render_matrix(j, out, indent);
    return;
  }
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_matrix_doc(value) || value.is_object() || (value.is_array() && !is_flat_array(value))) {
        out << pad << key << ":\n";
        render_pretty(value, out, indent + 2);
      } else {
        out << pad << key << ": ";
        render_flat(value, out);
        out << "\n";
      }
    }
    return;
  }
  if (j.is_array()) {
    for (std::size_t k = 0; k < j.size(); ++k) {
      out << pad << "[" << k << "]\n";
      render_pretty(j[k], out, indent + 2);
    }
    return;
  }
  out << pad;
  render_scalar(j, out);
  out << "\n";
}

void emit(const json& body, const std::string& format, std::ostream& out) {
  if (format == "pretty") {
    render_pretty(body, out, 0);
  } else {
    out << body.dump(2) << "\n";
  }
}

json error_json(const Error& e) {
  json err = {{"kind", e.kind()}, {"message", e.what()}};
  if (const auto* p = dynamic_cast<const PreconditionError*>(&e)) {
    err["invariant"] = p->invariant();
    err["measured"] = p->measured();
  } else if (const auto* c = dynamic_cast<const ConvergenceError*>(&e)) {
    err["residual"] = c->residual();
  } else if (const auto* nc = dynamic_cast<const NonCommutingError*>(&e)) {
    err["pair"] = {nc->first(), nc->second()};
    err["residual"] = nc->residual();
  }
  return {{"error", std::move(err)}};
}

using Handler = std::function<Report(const Options&)>;

struct Command {
  const char* name;
  const char* help;
  Handler handler;
  bool in = false;
  bool in2 = false;
  bool dims = false;
  bool subsystem = false;
  bool spectra = false;  // --alpha/--beta/--gamma
  bool sizes = false;    // --n/--r
};

std::vector<Command> commands() {
  return {
      {"split", "Positive/negative spectral parts of a Hermitian matrix", cmd_split, true},
      {"nearest-psd", "Nearest PSD matrix in Frobenius norm and its distance", cmd_nearest_psd,
       true},
      {"is-psd", "PSD test with minimum eigenvalue (exit 1 when not PSD)", cmd_is_psd, true},
      {"tensor-split", "Positive/negative parts of in (x) in2 from the factor splits",
       cmd_tensor_split, true, true},
      {"tensor-nearest", "Nearest PSD matrix to in (x) in2", cmd_tensor_nearest, true, true},
      {"schmidt", "Operator-Schmidt decomposition of a bipartite Hermitian operator", cmd_schmidt,
       true, false, true},
      {"ppt", "Positive-partial-transpose test (exit 1 when it fails)", cmd_ppt, true, false, true,
       true},
      {"partial-transpose", "Partial transpose of a bipartite matrix", cmd_partial_transpose, true,
       false, true, true},
      {"commute-approx",
       "Term-wise PSD approximation of sum_i a_i (x) b_i for commuting families (exit 1 when "
       "not additive)",
       cmd_commute_approx, true, true},
      {"bound-report", "Schmidt-term bound on the distance to the PSD cone (exit 1 when violated)",
       cmd_bound_report, true, false, true},
      {"weyl", "Weyl inequalities for (alpha, beta, gamma)", cmd_weyl, false, false, false, false,
       true},
      {"horn", "Trace identity and Horn inequalities for (alpha, beta, gamma)", cmd_horn, false,
       false, false, false, true},
      {"horn-sets", "Enumerate the Horn index triples T_r^n", cmd_horn_sets, false, false, false,
       false, false, true},
      {"practical-bounds", "Interval bounds on the spectrum of a sum", cmd_practical_bounds, false,
       false, false, false, true},
      {"oracle-sum", "Spectrum of A + B for random A, B with given spectra", cmd_oracle_sum, false,
       false, false, false, true},
      {"simdiag", "Simultaneously diagonalize a commuting family", cmd_simdiag, true},
      {"generate", "Seeded random matrix (hermitian, psd, density, unitary)", cmd_generate, false,
       false, true, false, false, true},
  };
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Nearest positive semi-definite approximation, tensor splits, separability "
               "checks and Horn/Weyl bounds",
               "psdapprox"};
  app.require_subcommand(1);

  const auto table = commands();
  std::map<std::string, const Command*> by_name;
  for (const auto& c : table) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    by_name[c.name] = &c;
    sub->add_option("--tol", o.tol, "Relative tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Seed for randomized steps");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "pretty"}));
    sub->add_flag("--symmetrize", o.symmetrize, "Use (A + A^dagger)/2 instead of rejecting");
    if (c.in) sub->add_option("--in", o.in, "Input matrix file ('-' for stdin)")->required();
    if (c.in2) sub->add_option("--in2", o.in2, "Second input matrix file")->required();
    if (c.dims) sub->add_option("--dims", o.dims, "Bipartite dimensions M N")->expected(2);
    if (c.subsystem) {
      sub->add_option("--subsystem", o.subsystem, "Subsystem to transpose")
          ->check(CLI::IsMember({"first", "second"}));
    }
    if (c.spectra) {
      sub->add_option("--alpha", o.alpha, "Comma-separated eigenvalues of A");
      sub->add_option("--beta", o.beta, "Comma-separated eigenvalues of B");
      sub->add_option("--gamma", o.gamma, "Comma-separated eigenvalues of A + B");
    }
    if (c.sizes) {
      sub->add_option("--n", o.n, "Dimension")->required();
      if (std::string(c.name) == "horn-sets") {
        sub->add_option("--r", o.r, "Subset cardinality")->required();
      } else {
        sub->add_option("--kind", o.kind, "hermitian|psd|density|unitary");
      }
    }
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (app.exit(e, out, err) == 0) return kSuccess;
    err << app.help();
    return kInputError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    Report report = by_name.at(name)->handler(o);
    emit(report.body, o.format, out);
    return report.exit_code;
  } catch (const Error& e) {
    emit(error_json(e), o.format, out);
    err << "psdapprox " << name << ": " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    emit({{"error", {{"kind", "internal"}, {"message", e.what()}}}}, o.format, out);
    err << "psdapprox " << name << ": " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace psdapprox::cli
