#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <variant>

#include "srpk/srpk.hpp"

namespace srpk::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class... Ts>
struct WithIntervals {
  using plain = std::variant<Ts...>;
  using any = std::variant<Ts..., IntervalSemiring<Ts>...>;
};

using Instances = WithIntervals<RealNonneg, RealNonnegCompleted, MaxPlusPlain, MaxPlusCompleted, MinPlusPlain,
                                MinPlusCompleted, MaxTimesPlain, MaxTimesCompleted, MaxMin, Boolean>;

Instances::plain parse_plain_semiring(std::string_view name) {
  if (name == "real") return RealNonneg{};
  if (name == "real-complete") return RealNonnegCompleted{};
  if (name == "max-plus") return MaxPlusPlain{};
  if (name == "max-plus-complete") return MaxPlusCompleted{};
  if (name == "min-plus") return MinPlusPlain{};
  if (name == "min-plus-complete") return MinPlusCompleted{};
  if (name == "max-times") return MaxTimesPlain{};
  if (name == "max-times-complete") return MaxTimesCompleted{};
  if (name == "boolean") return Boolean{};
  if (name == "max-min") return MaxMin{};
  constexpr std::string_view max_min = "max-min:";
  if (name.starts_with(max_min)) {
    auto range = name.substr(max_min.size());
    auto comma = range.find(',');
    if (comma == std::string_view::npos) throw UsageError("max-min needs bounds as max-min:a,b");
    return MaxMin(io::parse_number(range.substr(0, comma)), io::parse_number(range.substr(comma + 1)));
  }
  throw UsageError("unknown semiring '" + std::string(name) + "'");
}

Instances::any parse_semiring(std::string_view name) {
  constexpr std::string_view interval = "interval:";
  if (name.starts_with(interval)) {
    return std::visit([](auto base) -> Instances::any { return IntervalSemiring<decltype(base)>(base); },
                      parse_plain_semiring(name.substr(interval.size())));
  }
  return std::visit([](auto s) -> Instances::any { return s; }, parse_plain_semiring(name));
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

Method method_or(const RunConfig& c, Method fallback) {
  if (c.algorithm.empty()) return fallback;
  auto m = parse_method(c.algorithm);
  if (!m) throw UsageError("unknown algorithm '" + c.algorithm + "'");
  return *m;
}

StopPolicy policy_of(const RunConfig& c) {
  StopPolicy p;
  if (c.tol) p.tolerance = *c.tol;
  if (c.max_iter) p.max_iterations = *c.max_iter;
  return p;
}

ToeplitzVariant variant_of(const RunConfig& c) {
  if (c.variant == "general") return ToeplitzVariant::general;
  if (c.variant == "inverse") return ToeplitzVariant::inverse;
  throw UsageError("unknown variant '" + c.variant + "' (general or inverse)");
}

// Everything one command needs for a concrete semiring.
template <Semiring S>
class Runner {
 public:
  Runner(S s, const RunConfig& c, std::ostream& out) : s_(std::move(s)), c_(c), out_(out), rng_(seed_from_env()) {}

  void run() {
    const auto& cmd = c_.command;
    if (cmd == "closure") return closure_command();
    if (cmd == "solve") return solve_command();
    if (cmd == "decompose") return decompose_command();
    if (cmd == "path") return path_command();
    if (cmd == "yule-walker") return yule_walker_command();
    if (cmd == "toeplitz-solve") return toeplitz_command();
    throw UsageError("unknown command '" + cmd + "'");
  }

 private:
  Matrix<S> load_matrix() {
    if (c_.random) return random_matrix(s_, *c_.random, *c_.random, rng_);
    if (!c_.matrix.empty()) {
      auto in = open_input(c_.matrix);
      return io::read_matrix(s_, in);
    }
    if (!c_.graph.empty()) {
      auto in = open_input(c_.graph);
      return graph_to_matrix(io::read_edge_list(s_, in));
    }
    throw UsageError("one of --matrix, --graph or --random is required");
  }

  // Right-hand side as an n x s matrix; a single row of length n != 1 is
  // read as a column.
  Matrix<S> load_rhs(std::size_t n) {
    if (c_.rhs.empty()) {
      if (c_.random) return Matrix<S>::column(s_, random_vector(s_, n, rng_));
      throw UsageError("--rhs is required");
    }
    auto in = open_input(c_.rhs);
    auto b = io::read_matrix(s_, in);
    if (b.rows() == 1 && b.cols() == n && n != 1) return transpose(b);
    return b;
  }

  Vector<S> load_vector(const std::string& path, const char* flag) {
    if (path.empty()) throw UsageError(std::string(flag) + " is required");
    auto in = open_input(path);
    return io::read_vector(s_, in);
  }

  void emit(const std::string& text) {
    if (c_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(c_.output);
    if (!file) throw UsageError("cannot write '" + c_.output + "'");
    file << text;
  }

  void emit_matrix(const Matrix<S>& a) { emit(io::to_text(a)); }
  void emit_vector(const Vector<S>& v) { emit_matrix(Matrix<S>::column(s_, v)); }

  void closure_command() {
    auto a = load_matrix();
    auto method = method_or(c_, Method::gauss_jordan);
    if (method == Method::block && c_.split) return emit_matrix(star_block(a, *c_.split));
    emit_matrix(closure(a, method, policy_of(c_)));
  }

  void solve_command() {
    auto a = load_matrix();
    auto b = load_rhs(a.rows());
    auto method = method_or(c_, Method::gauss_jordan);
    if (c_.x0 != "zero") {
      if (!is_iterative(method)) throw UsageError("--x0 applies to jacobi and gauss-seidel only");
      if (b.cols() != 1) throw UsageError("--x0 needs a single right-hand side column");
      auto x0 = load_vector(c_.x0, "--x0");
      auto col = b.col(0);
      std::span<const element_t<S>> rhs(col), start(x0);
      auto report = method == Method::jacobi ? jacobi_solve(a, rhs, start, policy_of(c_))
                                             : gauss_seidel_solve(a, rhs, start, policy_of(c_));
      if (!report.solution) {
        raise(ErrorKind::no_convergence, c_.algorithm + " iterations " + std::string(to_string(report.status)) +
                                             " after " + std::to_string(report.iterations) + " sweeps");
      }
      return emit_vector(*report.solution);
    }
    if (method == Method::block && c_.split) return emit_matrix(mat_mul(star_block(a, *c_.split), b));
    emit_matrix(solve_bellman(a, b, method, policy_of(c_)));
  }

  void decompose_command() {
    auto a = load_matrix();
    const std::string alg = c_.algorithm.empty() ? "ldm" : c_.algorithm;
    if (alg == "cholesky") return emit_matrix(cholesky_idempotent(a));
    LdmFactors<S> f = factorize(a, alg);
    std::string text = io::to_text(f.packed);
    if (c_.expand) text += "\n" + io::to_text(f.L()) + "\n" + io::to_text(f.D()) + "\n" + io::to_text(f.M());
    emit(text);
  }

  LdmFactors<S> factorize(const Matrix<S>& a, const std::string& alg) {
    if (alg == "ldm") return ldm_decompose(a, LdmVersion::v1);
    if (alg == "ldm-v2") return ldm_decompose(a, LdmVersion::v2);
    if (alg == "symmetric") return ldm_symmetric(a, LdmVersion::v1);
    if (alg == "symmetric-v2") return ldm_symmetric(a, LdmVersion::v2);
    if (alg == "hessenberg") return ldm_hessenberg(a);
    if (alg == "tridiagonal") return ldm_tridiagonal(a);
    if (alg == "band") {
      if (!c_.band_p || !c_.band_q) throw UsageError("band needs --band-p and --band-q");
      return ldm_band(a, *c_.band_p, *c_.band_q);
    }
    throw UsageError("unknown decomposition '" + alg + "'");
  }

  void path_command() {
    if (!c_.algorithm.empty() && c_.algorithm != "gauss-jordan") {
      throw UsageError("path reconstruction needs --algorithm gauss-jordan");
    }
    if constexpr (!S::is_idempotent) {
      raise(ErrorKind::not_idempotent, "path reconstruction needs an idempotent semiring, got " + s_.name());
    } else {
      auto a = load_matrix();
      auto linked = star_gauss_jordan_linked(a);
      const std::size_t n = a.rows();
      if (c_.from.has_value() != c_.to.has_value()) throw UsageError("--from and --to go together");

      std::ostringstream paths;
      if (c_.from) {
        if (*c_.from < 1 || *c_.from > n || *c_.to < 1 || *c_.to > n) {
          throw UsageError("--from/--to outside 1.." + std::to_string(n));
        }
        write_path(paths, reconstruct_path(linked, *c_.from - 1, *c_.to - 1));
      } else {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            try {
              write_path(paths, reconstruct_path(linked, i, j));
            } catch (const Error& e) {
              if (e.kind() != ErrorKind::no_path) throw;
              paths << i + 1 << ' ' << j + 1 << ' ' << s_.format(linked.closure(i, j)) << ": none\n";
            }
          }
      }

      std::string matrix_text = io::to_text(linked.closure);
      if (c_.paths_output.empty()) {
        emit(matrix_text + "\n" + paths.str());
        return;
      }
      emit(matrix_text);
      std::ofstream file(c_.paths_output);
      if (!file) throw UsageError("cannot write '" + c_.paths_output + "'");
      file << paths.str();
    }
  }

  void write_path(std::ostream& os, const PathResult<S>& p) {
    os << p.nodes.front() + 1 << ' ' << p.nodes.back() + 1 << ' ' << s_.format(p.value) << ':';
    for (auto v : p.nodes) os << ' ' << v + 1;
    os << '\n';
  }

  SymmetricToeplitz<S> load_toeplitz(std::size_t random_len) {
    if (c_.random) return {sample_element(s_, rng_, random_len), random_vector(s_, random_len, rng_)};
    if (c_.r0.empty()) throw UsageError("--r0 is required");
    return {s_.parse(c_.r0), load_vector(c_.r, "--r")};
  }

  void yule_walker_command() {
    auto t = load_toeplitz(c_.random.value_or(0));
    emit_vector(durbin_yule_walker(s_, t, variant_of(c_)));
  }

  void toeplitz_command() {
    std::size_t n = c_.random.value_or(0);
    auto t = load_toeplitz(n == 0 ? 0 : n - 1);
    Vector<S> b = c_.random ? random_vector(s_, n, rng_) : load_vector(c_.rhs, "--rhs");
    emit_vector(levinson_solve(s_, t, std::span<const element_t<S>>(b), variant_of(c_)));
  }

  S s_;
  const RunConfig& c_;
  std::ostream& out_;
  Rng rng_;
};

bool is_computation_failure(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::no_closure:
    case ErrorKind::no_convergence:
    case ErrorKind::no_inverse:
    case ErrorKind::no_path: return true;
    default: return false;
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    auto semiring = parse_semiring(config.semiring);
    std::visit([&](const auto& s) { Runner(s, config, out).run(); }, semiring);
    return exit_ok;
  } catch (const Error& e) {
    err << "srpk: " << e.what() << '\n';
    return is_computation_failure(e.kind()) ? exit_failure : exit_input;
  } catch (const UsageError& e) {
    err << "srpk: " << e.what() << '\n';
    return exit_input;
  }
}

int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Matrix closures and Bellman equations X = AX + B over semirings", "srpk"};
  app.add_option("command", c.command, "closure, solve, decompose, path, yule-walker or toeplitz-solve")
      ->required()
      ->check(CLI::IsMember({"closure", "solve", "decompose", "path", "yule-walker", "toeplitz-solve"}));
  app.add_option("--semiring", c.semiring,
                 "real, real-complete, max-plus[-complete], min-plus[-complete], max-times[-complete], "
                 "max-min:a,b, boolean, or interval:<one of these>")
      ->required();
  app.add_option("--algorithm", c.algorithm,
                 "closure/solve: escalator, gauss-jordan, block, ldm, jacobi, gauss-seidel, nilpotent; "
                 "decompose: ldm, ldm-v2, symmetric, symmetric-v2, cholesky, band, hessenberg, tridiagonal");
  app.add_option("--matrix", c.matrix, "matrix file");
  app.add_option("--graph", c.graph, "edge-list file");
  app.add_option("--rhs", c.rhs, "right-hand side file");
  app.add_option("--output", c.output, "result file (default: standard output)");
  app.add_option("--paths-output", c.paths_output, "path command: node sequences file");
  app.add_option("--x0", c.x0, "iterative methods: 'zero' or a vector file");
  app.add_option("--max-iter", c.max_iter, "iteration cap");
  app.add_option("--tol", c.tol, "stopping tolerance for real instances");
  app.add_option("--split", c.split, "block method: size of the leading block");
  app.add_option("--band-p", c.band_p, "band decomposition: lower bandwidth");
  app.add_option("--band-q", c.band_q, "band decomposition: upper bandwidth");
  app.add_option("--variant", c.variant, "Toeplitz solvers: general or inverse");
  app.add_option("--r0", c.r0, "Toeplitz diagonal element");
  app.add_option("--r", c.r, "Toeplitz off-diagonal vector file");
  app.add_option("--from", c.from, "path command: source node (1-based)");
  app.add_option("--to", c.to, "path command: target node (1-based)");
  app.add_option("--random", c.random, "use random inputs of this order (seed from SRPK_SEED)");
  app.add_flag("--expand", c.expand, "decompose: also write L, D and M");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  }
  return run(c, out, err);
}

}  // namespace srpk::cli
