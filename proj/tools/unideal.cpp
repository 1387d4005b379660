#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "report.hpp"
#include "selftest.hpp"
#include "unideal/applications.hpp"
#include "unideal/certifier.hpp"
#include "unideal/errors.hpp"
#include "unideal/hadamard.hpp"
#include "unideal/io.hpp"
#include "unideal/linalg.hpp"
#include "unideal/lowrank.hpp"
#include "unideal/reductions.hpp"
#include "unideal/zero_test.hpp"

namespace unideal::cli {
namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Globals {
  std::string field;  // empty: the command's default
  std::uint64_t seed = 1;
  bool json = false;
  bool timings = false;
};

Field parse_field(const std::string& s, const Field& fallback = Field{}) {
  if (s.empty()) return fallback;
  if (s == "Q" || s == "q") return Field{};
  if (s.find_first_not_of("0123456789") != std::string::npos) throw UsageError("--field must be Q or a prime");
  try {
    return Field::prime(std::stoull(s));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--field: ") + e.what());
  } catch (const std::out_of_range&) {
    throw UsageError("--field: modulus does not fit in 64 bits");
  }
}

template <class Reader>
auto load(const std::string& path, Reader reader) {
  std::istringstream in(io::read_file(path));
  try {
    return reader(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save(const std::string& path, const std::function<void(std::ostream&)>& writer) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  writer(out);
}

std::vector<Scalar> parse_point(const std::string& text, const Field& f) {
  std::istringstream in(text);
  std::vector<Scalar> out;
  for (std::string tok; in >> tok;) out.push_back(f.parse(tok));
  return out;
}

std::string decision_word(bool member) { return member ? "MEMBER" : "NOT-MEMBER"; }

/// Largest total degree of a remainder modulo the ideal, capped by d.
std::uint64_t remainder_degree(const UnivariateIdeal& ideal, std::uint64_t d) {
  std::uint64_t s = 0;
  for (const auto& g : ideal.generators()) s += static_cast<std::uint64_t>(g.poly.degree() - 1);
  return std::min(s, d);
}

// ---------------------------------------------------------------- member

struct MemberArgs {
  std::string circuit, lowrank, ideal, mode = "auto";
  std::size_t trials = 20;
  std::size_t cap = 1'000'000;
};

// The powers path costs 2^O(k) per degree; beyond this it loses to expansion.
constexpr std::uint64_t kPowersAutoDegree = 6;

int run_member(const Globals& g, const MemberArgs& a, Report& r) {
  const Field f = parse_field(g.field);
  if (a.circuit.empty() == a.lowrank.empty()) throw UsageError("give exactly one of --circuit and --lowrank");
  const UnivariateIdeal ideal = load(a.ideal, [&](std::istream& in) { return io::read_ideal(in, f); });
  std::optional<LowRankInput> input;
  Circuit c;
  if (!a.lowrank.empty()) {
    input = load(a.lowrank, [&](std::istream& in) { return io::read_lowrank(in, f); });
    c = compose(*input);
  } else {
    c = load(a.circuit, [&](std::istream& in) { return io::read_circuit(in, f); });
  }
  const std::size_t n = c.nvars();
  if (ideal.var_span() > n) throw UsageError("ideal mentions a variable beyond the circuit's inputs");

  std::string mode = a.mode, rule;
  const auto power_exps = ideal.power_exponents(n);
  if (mode == "auto") {
    if (input) {
      mode = "lowrank";
      rule = "linear forms provided";
    } else if (power_exps && f.is_rational() && c.degree_bound() <= kPowersAutoDegree) {
      mode = "powers";
      rule = "every generator is c x_i^e_i and degree <= 6";
    } else {
      mode = "brute";
      rule = power_exps ? "degree above 6, exact expansion" : "general ideal, exact expansion";
    }
    r.detail("dispatch", mode + " (" + rule + ")");
  }

  Stopwatch clock;
  int code = kOk;
  if (mode == "lowrank") {
    if (!input) throw UsageError("--mode lowrank needs --lowrank");
    Rng rng(g.seed);
    r.seed = g.seed;
    const RemEvaluator ev(*input, ideal);
    const std::uint64_t deg = remainder_degree(ideal, input->degree_bound);
    const ZeroTestResult zt =
        random_zero_test([&](const std::vector<Scalar>& x) { return ev(x); }, n, deg, a.trials, f, rng);
    r.algorithm = "low-rank remainder evaluation + random zero test";
    r.decision = decision_word(!zt.nonzero);
    r.error_bound = zt.nonzero ? 0.0 : zt.error_bound;
    r.detail("forms", input->forms.size());
    r.detail("remainder_degree_bound", deg);
    r.detail("trials", zt.trials_run);
    r.detail("sample_size", zt.sample_size);
  } else if (mode == "powers") {
    if (!power_exps) throw UsageError("--mode powers needs generators of the form c x_i^e_i");
    if (!f.is_rational()) throw UsageError("--mode powers works over Q");
    const auto k = static_cast<unsigned>(c.degree_bound());
    std::vector<unsigned> e = *power_exps;
    for (auto& x : e)
      if (x == 0) x = k + 1;  // no generator: x_i^{k+1} cannot occur below degree k + 1
    Rng rng(g.seed);
    r.seed = g.seed;
    const PowersResult p = membership_powers(c, PowerIdealSpec{e, k}, rng);
    r.algorithm = "scaled Hadamard product with colour-coded detection circuit";
    r.decision = decision_word(!p.not_member);
    r.error_bound = p.error_bound;
    r.detail("k", k);
    r.detail("exponents", e);
    r.detail("fan_in", p.total_fan_in);
    r.detail("colourings_per_degree", p.trials_per_degree);
  } else if (mode == "brute") {
    r.algorithm = "expand and divide";
    r.decision = decision_word(is_member_brute(c, ideal, a.cap));
    r.error_bound = 0.0;
    r.detail("monomial_cap", a.cap);
  } else {
    throw UsageError("unknown --mode '" + mode + "'");
  }
  r.timings.emplace_back("decide", clock.seconds());
  return code;
}

// ---------------------------------------------------------------- rem-eval

struct RemArgs {
  std::string lowrank, ideal, point, mode = "lowrank";
};

int run_rem_eval(const Globals& g, const RemArgs& a, Report& r) {
  const Field f = parse_field(g.field);
  const LowRankInput input = load(a.lowrank, [&](std::istream& in) { return io::read_lowrank(in, f); });
  const UnivariateIdeal ideal = load(a.ideal, [&](std::istream& in) { return io::read_ideal(in, f); });
  const auto alpha = parse_point(a.point, f);
  if (alpha.size() != input.nvars())
    throw UsageError("--point needs " + std::to_string(input.nvars()) + " coordinates");
  Stopwatch clock;
  if (a.mode == "lowrank") {
    RemStats stats;
    r.value = rem_eval(input, ideal, alpha, &stats).to_string();
    r.algorithm = "low-rank remainder evaluation";
    r.detail("levels", stats.depth);
    r.detail("fixed_per_level", stats.fixed_per_level);
    r.detail("max_terms", stats.max_terms);
  } else if (a.mode == "brute") {
    r.value = divide(expand(compose(input)), ideal).eval(alpha).to_string();
    r.algorithm = "expand and divide";
  } else {
    throw UsageError("unknown --mode '" + a.mode + "'");
  }
  r.detail("field", f.name());
  r.timings.emplace_back("evaluate", clock.seconds());
  return kOk;
}

// ---------------------------------------------------------------- perm

struct PermArgs {
  std::string matrix, mode = "lowrank";
  std::optional<std::size_t> rank;
};

int run_perm(const Globals& g, const PermArgs& a, Report& r) {
  const Field f = parse_field(g.field);
  const Matrix m = load(a.matrix, [&](std::istream& in) { return io::read_matrix(in, f); });
  if (!m.is_square()) throw UsageError("the matrix must be square");
  const std::size_t rk = rank(m);
  if (a.rank && rk > *a.rank)
    throw CapExceeded(*a.rank, rk);  // declared rank budget violated
  Stopwatch clock;
  if (a.mode == "lowrank") {
    RemStats stats;
    r.value = permanent_lowrank(m, &stats).to_string();
    r.algorithm = "row product modulo <x_i^2> via low-rank remainder evaluation";
    r.detail("levels", stats.depth);
  } else if (a.mode == "ryser") {
    r.value = ryser_permanent(m).to_string();
    r.algorithm = "Ryser inclusion-exclusion";
  } else {
    throw UsageError("unknown --mode '" + a.mode + "'");
  }
  r.detail("n", m.rows());
  r.detail("rank", rk);
  r.timings.emplace_back("permanent", clock.seconds());
  return kOk;
}

// ---------------------------------------------------------------- vc

struct VcArgs {
  std::string graph;
  std::size_t k = 0;
  std::size_t trials = 20;
  bool tight = false;
};

int run_vc(const Globals& g, const VcArgs& a, Report& r) {
  VcOptions options;
  options.field = parse_field(g.field, options.field);
  options.tight = a.tight;
  const Graph graph = load(a.graph, [](std::istream& in) { return io::read_graph(in); });
  Rng rng(g.seed);
  r.seed = g.seed;
  Stopwatch clock;
  const VcResult v = vertex_cover_lowrank(graph, a.k, a.trials, rng, options);
  r.algorithm = "vertex cover polynomial modulo <x_i^2 - x_i> via low-rank remainder evaluation";
  r.decision = v.has_cover ? "HAS-VC" : "NO-VC";
  r.error_bound = v.has_cover ? 0.0 : v.error_bound;
  r.detail("n", graph.order());
  r.detail("edges", graph.size());
  r.detail("k", a.k);
  r.detail("adjacency_rank", rank(graph.adjacency()));
  r.detail("degree_bound", v.degree_bound);
  r.detail("trials", v.trials_run);
  r.detail("sample_size", v.sample_size);
  r.detail("field", options.field.name());
  r.timings.emplace_back("decide", clock.seconds());
  return kOk;
}

// ---------------------------------------------------------------- mlmd

struct MlmdArgs {
  std::string circuit, exponents, trials = "auto";
  unsigned k = 0;
  std::size_t zt_trials = 2;
};

int run_mlmd(const Globals& g, const MlmdArgs& a, Report& r) {
  if (!g.field.empty() && parse_field(g.field).is_prime_field()) throw UsageError("mlmd works over Q");
  const Circuit c = load(a.circuit, [](std::istream& in) { return io::read_circuit(in); });
  std::vector<unsigned> e;
  {
    std::istringstream in(a.exponents);
    for (std::string tok; in >> tok;) {
      if (tok.find_first_not_of("0123456789") != std::string::npos) throw UsageError("--exponents: bad entry " + tok);
      e.push_back(static_cast<unsigned>(std::stoul(tok)));
    }
  }
  if (e.size() != c.nvars()) throw UsageError("--exponents needs one entry per circuit input");
  if (c.degree_bound() > a.k) throw UsageError("the circuit's degree bound exceeds --k");
  PowersOptions options;
  options.zt_trials = a.zt_trials;
  if (a.trials != "auto") {
    if (a.trials.empty() || a.trials.find_first_not_of("0123456789") != std::string::npos || a.trials == "0")
      throw UsageError("--trials must be 'auto' or a positive integer");
    options.trials = std::stoull(a.trials);
  }
  Rng rng(g.seed);
  r.seed = g.seed;
  Stopwatch clock;
  const PowersResult p = membership_powers(c, PowerIdealSpec{e, a.k}, rng, options);
  r.algorithm = "scaled Hadamard product with colour-coded detection circuit";
  r.decision = decision_word(!p.not_member);
  r.error_bound = p.error_bound;
  r.detail("k", a.k);
  r.detail("exponents", e);
  r.detail("fan_in", p.total_fan_in);
  r.detail("colourings_per_degree", p.trials_per_degree);
  if (p.not_member) r.detail("witness_degree", p.witness_degree);
  r.timings.emplace_back("decide", clock.seconds());
  return kOk;
}

// ---------------------------------------------------------------- certify

struct CertifyArgs {
  std::string circuit, ideal, verify, cert_out, eps_cap;
  bool search = false;
};

std::string approx(const mpq_class& q) { return format_double(q.get_d()); }

int run_certify(const Globals& g, const CertifyArgs& a, Report& r) {
  if (!g.field.empty() && parse_field(g.field).is_prime_field()) throw UsageError("certify works over Q");
  if (a.search == !a.verify.empty()) throw UsageError("give exactly one of --search and --verify");
  const Circuit c = load(a.circuit, [](std::istream& in) { return io::read_circuit(in); });
  const UnivariateIdeal ideal = load(a.ideal, [](std::istream& in) { return io::read_ideal(in); });
  std::optional<mpq_class> cap;
  if (!a.eps_cap.empty()) cap = Field{}.parse(a.eps_cap).rational();
  Stopwatch clock;
  const PrecisionBudget budget = compute_threshold(c, ideal, cap);
  r.timings.emplace_back("threshold", clock.seconds());
  r.detail("M", budget.M.get_str());
  r.detail("M_approx", approx(budget.M));
  r.detail("eps", budget.eps.get_str());
  r.detail("L", budget.L);
  r.error_bound = 0.0;
  if (a.search) {
    const SearchResult s = search_nonmembership(c, ideal, budget);
    r.timings.emplace_back("search", clock.seconds());
    r.algorithm = "approximate root tuples with a separated threshold";
    r.decision = to_string(s.decision);
    r.detail("tuples_checked", s.tuples_checked);
    if (s.certificate && !a.cert_out.empty()) {
      save(a.cert_out, [&](std::ostream& out) { io::write_certificate(out, *s.certificate); });
      r.detail("certificate", a.cert_out);
    }
    return s.decision == Decision::Undecided ? kUndecided : kOk;
  }
  const Certificate cert = load(a.verify, [](std::istream& in) { return io::read_certificate(in); });
  const Verdict v = verify_certificate(c, ideal, cert, budget);
  r.timings.emplace_back("verify", clock.seconds());
  r.algorithm = "exact certificate check";
  switch (v) {
    case Verdict::Accept:
      r.decision = "NOT-MEMBER";
      r.value = "ACCEPT";
      return kOk;
    case Verdict::RejectResidual:
      r.value = "REJECT-RESIDUAL";
      break;
    case Verdict::RejectValue:
      r.value = "REJECT-VALUE";
      break;
  }
  r.decision = to_string(Decision::Undecided);
  return kUndecided;
}

// ---------------------------------------------------------------- reduce

struct ReduceArgs {
  std::string kind, in, out_circuit, out_ideal, out_klineq;
  std::optional<std::size_t> k;
};

int run_reduce(const Globals& g, const ReduceArgs& a, Report& r) {
  MembershipInstance m;
  auto need_k = [&] {
    if (!a.k) throw UsageError("reduce " + a.kind + " needs --k");
    return *a.k;
  };
  if (a.kind == "indep-set") {
    m = reduce_independent_set(load(a.in, [](std::istream& in) { return io::read_graph(in); }), need_k());
  } else if (a.kind == "coloring") {
    m = graph_coloring_instance(load(a.in, [](std::istream& in) { return io::read_graph(in); }), need_k(),
                                parse_field(g.field));
  } else if (a.kind == "klineq") {
    m = reduce_klineq(load(a.in, [](std::istream& in) { return io::read_klineq(in); }));
  } else if (a.kind == "one-in-three") {
    const KLinEqInstance lin = reduce_one_in_three(load(a.in, [](std::istream& in) { return io::read_one_in_three(in); }));
    if (!a.out_klineq.empty()) save(a.out_klineq, [&](std::ostream& out) { io::write_klineq(out, lin); });
    r.detail("klineq_rows", lin.rows());
    r.detail("klineq_columns", lin.cols());
    m = reduce_klineq(lin);
  } else {
    throw UsageError("unknown reduction '" + a.kind + "'");
  }
  save(a.out_circuit, [&](std::ostream& out) { io::write_circuit(out, m.circuit); });
  save(a.out_ideal, [&](std::ostream& out) { io::write_ideal(out, m.ideal); });
  r.algorithm = "reduction " + a.kind;
  r.detail("vars", m.circuit.nvars());
  r.detail("generators", m.ideal.size());
  r.detail("circuit_nodes", m.circuit.size());
  r.detail("degree_bound", m.circuit.degree_bound());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Membership of circuit polynomials in univariate ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "Q or a prime modulus (vc defaults to 2^61-1, everything else to Q)");
  app.add_option("--seed", g.seed, "Seed for every random choice")->capture_default_str();
  app.add_flag("--json", g.json, "Print a JSON object instead of text");
  app.add_flag("--timings", g.timings, "Include wall-clock timings (output is then no longer reproducible)");

  Report report;
  std::function<int()> command;

  MemberArgs member;
  auto* m = app.add_subcommand("member", "Decide f in I");
  m->add_option("--circuit", member.circuit, "Circuit file");
  m->add_option("--lowrank", member.lowrank, "Low-rank input file (outer circuit plus forms)");
  m->add_option("--ideal", member.ideal, "Ideal file")->required();
  m->add_option("--mode", member.mode, "auto | brute | lowrank | powers")->capture_default_str();
  m->add_option("--trials", member.trials, "Zero-test trials on the low-rank path")->capture_default_str();
  m->add_option("--cap", member.cap, "Monomial cap for expansion")->capture_default_str();
  m->callback([&] { command = [&] { return run_member(g, member, report); }; });

  RemArgs rem;
  auto* re = app.add_subcommand("rem-eval", "Evaluate (f mod I) at a point");
  re->add_option("--lowrank", rem.lowrank, "Low-rank input file")->required();
  re->add_option("--ideal", rem.ideal, "Ideal file")->required();
  re->add_option("--point", rem.point, "Coordinates, e.g. \"1 -2 3/4\"")->required();
  re->add_option("--mode", rem.mode, "lowrank | brute")->capture_default_str();
  re->callback([&] { command = [&] { return run_rem_eval(g, rem, report); }; });

  PermArgs perm;
  auto* pe = app.add_subcommand("perm", "Permanent of a low-rank matrix");
  pe->add_option("--matrix", perm.matrix, "Matrix file")->required();
  pe->add_option("--rank", perm.rank, "Declared rank; larger actual rank exits with code 3");
  pe->add_option("--mode", perm.mode, "lowrank | ryser")->capture_default_str();
  pe->callback([&] { command = [&] { return run_perm(g, perm, report); }; });

  VcArgs vc;
  auto* v = app.add_subcommand("vc", "Vertex cover of size <= k for graphs of low adjacency rank");
  v->add_option("--graph", vc.graph, "Graph file")->required();
  v->add_option("--k", vc.k, "Cover size")->required();
  v->add_option("--trials", vc.trials, "Zero-test trials")->capture_default_str();
  v->add_flag("--tight", vc.tight, "Use |E| instead of C(n,2) as the quadratic form's range");
  v->callback([&] { command = [&] { return run_vc(g, vc, report); }; });

  MlmdArgs mlmd;
  auto* ml = app.add_subcommand("mlmd", "Membership in <x_1^e_1, ..., x_n^e_n> for degree-k circuits");
  ml->add_option("--circuit", mlmd.circuit, "Circuit file")->required();
  ml->add_option("--k", mlmd.k, "Degree bound")->required();
  ml->add_option("--exponents", mlmd.exponents, "e_1 ... e_n")->required();
  ml->add_option("--trials", mlmd.trials, "Colourings per degree, or auto")->capture_default_str();
  ml->add_option("--zt-trials", mlmd.zt_trials, "Zero-test points per prime")->capture_default_str();
  ml->callback([&] { command = [&] { return run_mlmd(g, mlmd, report); }; });

  CertifyArgs cert;
  auto* ce = app.add_subcommand("certify", "Numeric nonmembership certificates for squarefree generators");
  ce->add_option("--circuit", cert.circuit, "Circuit file (over Q)")->required();
  ce->add_option("--ideal", cert.ideal, "Ideal file (squarefree generators, one per variable)")->required();
  ce->add_option("--verify", cert.verify, "Certificate file to check");
  ce->add_flag("--search", cert.search, "Search all approximate root tuples");
  ce->add_option("--cert-out", cert.cert_out, "Write the certificate found by --search");
  ce->add_option("--eps-cap", cert.eps_cap, "Upper bound on the root approximation radius");
  ce->callback([&] { command = [&] { return run_certify(g, cert, report); }; });

  ReduceArgs red;
  auto* rd = app.add_subcommand("reduce", "Emit membership instances from combinatorial problems");
  rd->add_option("kind", red.kind, "indep-set | klineq | one-in-three | coloring")->required();
  rd->add_option("--in", red.in, "Source instance file")->required();
  rd->add_option("--out-circuit", red.out_circuit, "Circuit output file")->required();
  rd->add_option("--out-ideal", red.out_ideal, "Ideal output file")->required();
  rd->add_option("--out-klineq", red.out_klineq, "one-in-three: also write the intermediate k-Lin-Eq instance");
  rd->add_option("--k", red.k, "Independent set size or colour count");
  rd->callback([&] { command = [&] { return run_reduce(g, red, report); }; });

  auto* st = app.add_subcommand("selftest", "Run the built-in oracle-equivalence checks");
  st->callback([&] {
    command = [&] { return run_selftest(g.seed, std::cout) == 0 ? kOk : kFailure; };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const int code = command();
    if (!st->parsed()) std::cout << render(report, g.json, g.timings);
    return code;
  } catch (const CapExceeded& e) {
    std::cerr << "unideal: " << e.what() << '\n';
    return kCap;
  } catch (const ConvergenceFailure& e) {
    std::cerr << "unideal: " << e.what() << '\n';
    return kUndecided;
  } catch (const UsageError& e) {
    std::cerr << "unideal: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "unideal: " << e.what() << '\n';
    return kUsage;
  } catch (const NotSquarefree& e) {
    std::cerr << "unideal: " << e.what() << '\n';
    return kUsage;
  } catch (const FieldMismatch& e) {
    std::cerr << "unideal: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "unideal: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "unideal: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace unideal::cli

int main(int argc, char** argv) { return unideal::cli::main(argc, argv); }
